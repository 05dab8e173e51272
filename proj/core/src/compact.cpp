#include "homeo/compact.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "homeo/errors.hpp"
#include "homeo/lipschitz.hpp"
#include "homeo/parse.hpp"

namespace homeo {

CompactSet make_compact_set(std::vector<Complex> points, std::optional<double> net_resolution) {
    if (points.empty()) throw DomainError("a compact set needs at least one point");
    for (const Complex& p : points) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
            throw DomainError("compact set points must be finite");
        }
    }
    if (net_resolution && !(*net_resolution > 0.0)) {
        throw DomainError("net resolution must be positive");
    }
    return CompactSet{std::move(points), net_resolution};
}

double directed_hausdorff(const CompactSet& a, const CompactSet& b) {
    double worst = 0.0;
    for (const Complex& p : a.points) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const Complex& q : b.points) {
            nearest = std::min(nearest, std::abs(p - q));
            if (nearest == 0.0) break;
        }
        worst = std::max(worst, nearest);
    }
    return worst;
}

double hausdorff(const CompactSet& a, const CompactSet& b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

CompactSet image(const Homeo& h, const CompactSet& k) {
    CompactSet out;
    out.points.reserve(k.points.size());
    for (const Complex& p : k.points) out.points.push_back(h.eval(p));
    if (k.net_resolution) {
        try {
            out.net_resolution = *k.net_resolution * lipschitz_bound(h, enclosing_disk(k));
        } catch (const NoBoundError&) {
            out.net_resolution = std::nullopt; // fineness unknown past this map
        }
    }
    return out;
}

bool in_neighborhood(const CompactSet& k, const CompactSet& l, double eps) {
    if (!(eps > 0.0)) throw DomainError("neighborhood radius must be positive");
    for (const Complex& p : k.points) {
        bool covered = false;
        for (const Complex& q : l.points) {
            if (std::abs(p - q) < eps) { // open neighborhood
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

namespace {

// First index from which `ok` stays true through the end; sequence size if
// it never does.
std::size_t settled_from(const std::vector<bool>& ok) {
    std::size_t from = ok.size();
    for (std::size_t i = ok.size(); i-- > 0;) {
        if (!ok[i]) break;
        from = i;
    }
    return from;
}

} // namespace

LimitReport limit_test(std::span<const CompactSet> sequence, const CompactSet& limit, double tol) {
    if (sequence.empty()) throw DomainError("limit test needs a nonempty sequence");
    if (!(tol > 0.0)) throw DomainError("limit test tolerance must be positive");

    LimitReport report;
    report.tolerance = tol;
    std::vector<bool> lower_ok, upper_ok;
    for (const CompactSet& k : sequence) {
        report.distances.push_back(hausdorff(k, limit));
        lower_ok.push_back(directed_hausdorff(limit, k) <= tol); // limit points are reached
        upper_ok.push_back(directed_hausdorff(k, limit) <= tol); // nothing strays from the limit
    }
    report.liminf_from = settled_from(lower_ok);
    report.liminf_ok = report.liminf_from < sequence.size();
    report.limsup_from = settled_from(upper_ok);
    report.limsup_ok = report.limsup_from < sequence.size();
    report.converged = report.distances.back() <= tol;
    return report;
}

Disk enclosing_disk(const CompactSet& k) {
    double xlo = k.points.front().real(), xhi = xlo;
    double ylo = k.points.front().imag(), yhi = ylo;
    for (const Complex& p : k.points) {
        xlo = std::min(xlo, p.real());
        xhi = std::max(xhi, p.real());
        ylo = std::min(ylo, p.imag());
        yhi = std::max(yhi, p.imag());
    }
    const Complex center{0.5 * (xlo + xhi), 0.5 * (ylo + yhi)};
    double radius = 0.0;
    for (const Complex& p : k.points) radius = std::max(radius, std::abs(p - center));
    return Disk{center, std::max(radius, 1e-12), true};
}

CompactSet rectangle_grid(Complex lo, Complex hi, int nx, int ny) {
    if (nx < 1 || ny < 1) throw DomainError("grid needs at least one point per axis");
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        const double y = ny == 1 ? lo.imag() : lo.imag() + (hi.imag() - lo.imag()) * j / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x =
                nx == 1 ? lo.real() : lo.real() + (hi.real() - lo.real()) * i / (nx - 1);
            pts.emplace_back(x, y);
        }
    }
    const double pitch = std::max(nx > 1 ? (hi.real() - lo.real()) / (nx - 1) : 0.0,
                                  ny > 1 ? (hi.imag() - lo.imag()) / (ny - 1) : 0.0);
    return make_compact_set(std::move(pts),
                            pitch > 0.0 ? std::optional<double>(pitch) : std::nullopt);
}

CompactSet circle_net(Complex center, double radius, int n) {
    if (n < 1) throw DomainError("circle net needs at least one point");
    if (!(radius > 0.0)) throw DomainError("circle net radius must be positive");
    std::vector<Complex> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        pts.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * i / n));
    }
    // 2 * r * sin(pi / n): the chord between neighbors.
    return make_compact_set(std::move(pts), 2.0 * radius * std::sin(std::numbers::pi / n));
}

CompactSet read_cloud(std::istream& in) {
    std::vector<Complex> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        double re = 0.0, im = 0.0;
        if (!(fields >> re >> im)) {
            throw DomainError("cloud line " + std::to_string(lineno) +
                              ": expected two decimal fields \"re im\"");
        }
        std::string rest;
        if (fields >> rest) {
            throw DomainError("cloud line " + std::to_string(lineno) + ": trailing content");
        }
        pts.emplace_back(re, im);
    }
    return make_compact_set(std::move(pts));
}

CompactSet read_cloud_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open cloud file: " + path);
    return read_cloud(in);
}

void write_cloud(std::ostream& out, const CompactSet& k) {
    for (const Complex& p : k.points) {
        out << format_double(p.real()) << ' ' << format_double(p.imag()) << '\n';
    }
}

void write_cloud_file(const std::string& path, const CompactSet& k) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open cloud file for writing: " + path);
    write_cloud(out, k);
}

} // namespace homeo
