#include "homeo/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "homeo/errors.hpp"

namespace homeo {

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) return format_double(z.real());
    std::string out = format_double(z.real());
    if (z.imag() < 0.0 || std::signbit(z.imag())) {
        out += '-';
        out += format_double(-z.imag());
    } else {
        out += '+';
        out += format_double(z.imag());
    }
    out += 'i';
    return out;
}

namespace {

// Printing walks the tree; anything without a grammar form (disk transports
// of composite disk maps, bumps with a nonidentity chart) is expanded into
// an equivalent composition of printable atoms.

std::string print_node(const Homeo::Node& node);

std::string bump_args(Complex center, double rho, double delta, double eta) {
    return "center=" + format_complex(center) + ",rho=" + format_double(rho) +
           ",delta=" + format_double(delta) + ",eta=" + format_double(eta);
}

bool is_identity_chart(const Homeo& chart) {
    const auto* p = std::get_if<Primitive>(&chart.root().value);
    return p != nullptr && std::holds_alternative<Identity>(*p);
}

// Disk transports of composite disk maps print as composition chains, so
// they need the same parentheses as plane-level composites.
bool prints_as_chain(const Homeo::Node& node) {
    if (std::holds_alternative<Homeo::Node::Composite>(node.value)) return true;
    if (const auto* d = std::get_if<Homeo::Node::DiskConjugate>(&node.value)) {
        return std::holds_alternative<DiskMap::Node::Composite>(d->map.root().value);
    }
    return false;
}

// True when the printed form already ends in "^-1" and would not survive a
// second exponent without parentheses.
bool prints_as_inverse(const Homeo::Node& node) {
    if (std::holds_alternative<Homeo::Node::Inverted>(node.value)) return true;
    if (const auto* d = std::get_if<Homeo::Node::DiskConjugate>(&node.value)) {
        return std::holds_alternative<DiskMap::Node::Inverted>(d->map.root().value);
    }
    return false;
}

std::string print_chain_operand(const Homeo::Node& node) {
    const std::string text = print_node(node);
    if (prints_as_chain(node)) return "(" + text + ")";
    return text;
}

std::string print_inverse_base(const Homeo::Node& node) {
    const std::string text = print_node(node);
    if (prints_as_chain(node) || prints_as_inverse(node)) return "(" + text + ")";
    return text;
}

std::string print_disk_node(const DiskMap::Node& node) {
    if (std::holds_alternative<DiskIdentity>(node.value)) return "id";
    if (const auto* b = std::get_if<RadialBump>(&node.value)) {
        return "planebump(" + bump_args(b->center, b->rho, b->delta, b->eta) + ")";
    }
    if (const auto* c = std::get_if<DiskMap::Node::Composite>(&node.value)) {
        const std::string outer = print_disk_node(*c->outer);
        std::string inner = print_disk_node(*c->inner);
        if (std::holds_alternative<DiskMap::Node::Composite>(c->inner->value)) {
            inner = "(" + inner + ")";
        }
        return outer + " . " + inner;
    }
    const auto& inv = std::get<DiskMap::Node::Inverted>(node.value);
    std::string child = print_disk_node(*inv.child);
    if (!std::holds_alternative<RadialBump>(inv.child->value) &&
        !std::holds_alternative<DiskIdentity>(inv.child->value)) {
        child = "(" + child + ")";
    }
    return child + "^-1";
}

struct NodePrinter {
    std::string operator()(const Primitive& p) const {
        if (std::holds_alternative<Identity>(p)) return "id";
        if (std::holds_alternative<Conjugation>(p)) return "conj";
        if (const auto* t = std::get_if<Translation>(&p)) {
            return "translate(" + format_complex(t->offset) + ")";
        }
        if (const auto* r = std::get_if<Rotation>(&p)) {
            return "rotate(" + format_double(r->angle) + ")";
        }
        return "scale(" + format_double(std::get<Scaling>(p).factor) + ")";
    }
    std::string operator()(const Homeo::Node::Composite& c) const {
        // Left-nested chains print flat; a right-nested composite keeps its
        // parentheses so the reparse reproduces the tree shape.
        const std::string outer = print_node(*c.outer);
        return outer + " . " + print_chain_operand(*c.inner);
    }
    std::string operator()(const Homeo::Node::Inverted& i) const {
        return print_inverse_base(*i.child) + "^-1";
    }
    std::string operator()(const Homeo::Node::DiskConjugate& d) const {
        return print_disk_node(d.map.root());
    }
    std::string operator()(const Homeo::Node::CellBump& b) const {
        const std::string bump =
            "bump(" + bump_args(b.cell.center, b.cell.rho, b.delta, b.cell.eta) + ")";
        if (is_identity_chart(b.cell.chart)) return bump;
        const std::string chart = print_chain_operand(b.cell.chart.root());
        const std::string chart_inv = print_inverse_base(b.cell.chart.root());
        return "(" + chart + " . " + bump + " . " + chart_inv + "^-1)";
    }
};

std::string print_node(const Homeo::Node& node) { return std::visit(NodePrinter{}, node.value); }

} // namespace

std::string print_expr(const Homeo& h) { return print_node(h.root()); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    std::string describe_here() const {
        if (pos >= text.size()) return "end of input";
        return "'" + std::string(1, text[pos]) + "'";
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(pos, expected, describe_here());
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail("'" + std::string(1, c) + "'");
    }

    // Lower-case keyword; empty if the next token is not a word.
    std::string peek_word() {
        skip_ws();
        std::size_t end = pos;
        while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
        return std::string(text.substr(pos, end - pos));
    }

    void consume_word(const std::string& word) { pos += word.size(); }

    void expect_word(const std::string& word) {
        skip_ws();
        if (peek_word() != word) fail("'" + word + "'");
        consume_word(word);
    }

    double parse_real() {
        skip_ws();
        double value = 0.0;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        const auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc{} || res.ptr == begin) fail("number");
        pos += static_cast<std::size_t>(res.ptr - begin);
        return value;
    }

    double parse_unsigned_real() {
        skip_ws();
        if (pos < text.size() && text[pos] == '-') fail("unsigned number");
        return parse_real();
    }

    Complex parse_complex() {
        const double re = parse_real();
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            const bool negative = text[pos] == '-';
            ++pos;
            const double im = parse_unsigned_real();
            skip_ws();
            if (pos >= text.size() || text[pos] != 'i') fail("'i'");
            ++pos;
            return Complex{re, negative ? -im : im};
        }
        return Complex{re, 0.0};
    }
};

Homeo parse_expression(Cursor& cur);

struct BumpParams {
    Complex center;
    double rho = 0.0;
    double delta = 0.0;
    double eta = 0.0;
};

BumpParams parse_bump_args(Cursor& cur) {
    BumpParams p;
    cur.expect('(');
    cur.expect_word("center");
    cur.expect('=');
    p.center = cur.parse_complex();
    cur.expect(',');
    cur.expect_word("rho");
    cur.expect('=');
    p.rho = cur.parse_real();
    cur.expect(',');
    cur.expect_word("delta");
    cur.expect('=');
    p.delta = cur.parse_real();
    cur.expect(',');
    cur.expect_word("eta");
    cur.expect('=');
    p.eta = cur.parse_real();
    cur.expect(')');
    return p;
}

Homeo parse_base(Cursor& cur) {
    if (cur.try_consume('(')) {
        Homeo inner = parse_expression(cur);
        cur.expect(')');
        return inner;
    }
    const std::string word = cur.peek_word();
    if (word == "id") {
        cur.consume_word(word);
        return Homeo::identity();
    }
    if (word == "conj") {
        cur.consume_word(word);
        return Homeo::conjugation();
    }
    if (word == "translate") {
        cur.consume_word(word);
        cur.expect('(');
        const Complex a = cur.parse_complex();
        cur.expect(')');
        return Homeo::translation(a);
    }
    if (word == "rotate") {
        cur.consume_word(word);
        cur.expect('(');
        const double theta = cur.parse_real();
        cur.expect(')');
        return Homeo::rotation(theta);
    }
    if (word == "scale") {
        cur.consume_word(word);
        cur.expect('(');
        const double s = cur.parse_real();
        cur.expect(')');
        return Homeo::scaling(s);
    }
    if (word == "bump") {
        cur.consume_word(word);
        const BumpParams p = parse_bump_args(cur);
        return cell_bump(make_cell(Homeo::identity(), p.center, p.rho, p.eta), p.delta);
    }
    if (word == "planebump") {
        cur.consume_word(word);
        const BumpParams p = parse_bump_args(cur);
        return plane_from_disk(DiskMap::radial_bump(p.center, p.rho, p.delta, p.eta));
    }
    cur.fail("map name (id, conj, translate, rotate, scale, bump, planebump) or '('");
}

Homeo parse_atom(Cursor& cur) {
    Homeo base = parse_base(cur);
    cur.skip_ws();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '^') {
        ++cur.pos;
        if (cur.pos >= cur.text.size() || cur.text[cur.pos] != '-') cur.fail("'-1'");
        ++cur.pos;
        if (cur.pos >= cur.text.size() || cur.text[cur.pos] != '1') cur.fail("'-1'");
        ++cur.pos;
        return inverse(base);
    }
    return base;
}

Homeo parse_expression(Cursor& cur) {
    Homeo result = parse_atom(cur);
    while (cur.try_consume('.')) {
        result = compose(result, parse_atom(cur));
    }
    return result;
}

} // namespace

Homeo parse_expr(std::string_view text) {
    Cursor cur{text};
    Homeo result = parse_expression(cur);
    if (!cur.at_end()) cur.fail("'.' or end of input");
    return result;
}

} // namespace homeo
