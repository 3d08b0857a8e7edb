#include "sphavg/endpoints.hpp"

#include <algorithm>
#include <map>

namespace sphavg::region {

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "unknown";
    }
}

Classification make_classification(Verdict strong, Verdict restricted, Verdict weak,
                                   Verdict restricted_weak, std::string source) {
    Classification c{strong, restricted, weak, restricted_weak, std::move(source)};
    if (c.strong == Verdict::Yes) {
        c.restricted = Verdict::Yes;
        c.weak = Verdict::Yes;
    }
    if (c.restricted == Verdict::Yes || c.weak == Verdict::Yes) c.restricted_weak = Verdict::Yes;
    return c;
}

namespace {

const Verdict Y = Verdict::Yes, N = Verdict::No, U = Verdict::Unknown;

Classification strong_type(std::string src) { return make_classification(Y, U, U, U, std::move(src)); }
Classification restricted_not_strong(std::string src) {
    return make_classification(N, Y, U, U, std::move(src));
}
Classification weak_not_strong(std::string src) { return make_classification(N, U, Y, U, std::move(src)); }
Classification restricted_only(std::string src) { return make_classification(U, Y, U, U, std::move(src)); }
Classification restricted_weak_only(std::string src) {
    return make_classification(U, U, U, Y, std::move(src));
}
Classification fails_strong(std::string src) { return make_classification(N, U, U, U, std::move(src)); }
Classification all_unknown(std::string src) { return make_classification(U, U, U, U, std::move(src)); }

void expand_orbit(std::vector<EndpointRecord>& out, const ExponentPoint& canonical,
                  const std::string& stem, const Classification& cls) {
    auto members = orbit(canonical);
    // the canonical representative keeps the bare stem name
    int idx = 0;
    for (const auto& m : members) {
        EndpointRecord rec;
        rec.point = m;
        rec.orbit = stem;
        rec.cls = cls;
        if (m == canonical)
            rec.name = stem;
        else
            rec.name = stem + "#" + std::to_string(++idx);
        out.push_back(std::move(rec));
    }
}

std::vector<EndpointRecord> catalogue_n2() {
    std::vector<EndpointRecord> out;
    auto add = [&](const char* name, const char* stem, ExponentPoint p, Classification c) {
        out.push_back({std::move(p), name, stem, std::move(c)});
    };
    const std::string strong_src = "strong-type endpoint result (n=2)";
    const std::string restr_src = "restricted type; strong type fails (n=2)";
    add("O", "O", pt(2, {{0, 1}, {0, 1}}, {0, 1}), strong_type(strong_src));
    add("E'", "E", pt(2, {{1, 2}, {0, 1}}, {0, 1}), restricted_not_strong(restr_src));
    add("E", "E", pt(2, {{0, 1}, {1, 2}}, {0, 1}), restricted_not_strong(restr_src));
    add("B", "B", pt(2, {{1, 3}, {1, 3}}, {0, 1}), restricted_not_strong(restr_src));
    add("K", "K", pt(2, {{0, 1}, {1, 1}}, {1, 2}),
        weak_not_strong("weak type by duality; strong type fails (n=2)"));
    add("K'", "K", pt(2, {{1, 1}, {0, 1}}, {1, 2}),
        weak_not_strong("weak type by duality; strong type fails (n=2)"));
    add("M", "M", pt(2, {{3, 5}, {3, 5}}, {2, 5}), strong_type(strong_src));
    add("C", "C", pt(2, {{0, 1}, {1, 1}}, {1, 1}), strong_type(strong_src));
    add("C'", "C", pt(2, {{1, 1}, {0, 1}}, {1, 1}), strong_type(strong_src));
    add("P", "P", pt(2, {{1, 2}, {1, 1}}, {1, 1}), restricted_not_strong(restr_src));
    add("P'", "P", pt(2, {{1, 1}, {1, 2}}, {1, 1}), restricted_not_strong(restr_src));
    add("G'", "G", pt(2, {{1, 1}, {1, 3}}, {2, 3}), restricted_not_strong(restr_src));
    add("G", "G", pt(2, {{1, 3}, {1, 1}}, {2, 3}), restricted_not_strong(restr_src));
    return out;
}

std::vector<EndpointRecord> catalogue_general(int n) {
    std::vector<EndpointRecord> out;
    const std::string strong_src = "strong-type endpoint result (n>=3)";
    auto rep = [&](std::vector<Rational> x, Rational xr) {
        return ExponentPoint(n, std::move(x), std::move(xr));
    };
    const Rational b(n - 1, n + 1), m(n + 1, n + 3), a(n + 1, n + 2), e(n - 1, n);

    expand_orbit(out, rep(std::vector<Rational>(n, Rational(0)), 0), "O", strong_type(strong_src));
    expand_orbit(out, rep(std::vector<Rational>(n, b), 0), "B", strong_type(strong_src));
    expand_orbit(out, rep(std::vector<Rational>(n, m), Rational(2, n + 3)), "M",
                 strong_type(strong_src));
    expand_orbit(out, rep(std::vector<Rational>(n, a), 1), "A", strong_type(strong_src));
    {
        std::vector<Rational> x(n, a);
        x[n - 1] = 0;
        expand_orbit(out, rep(std::move(x), Rational(1, n + 2)), "A*", strong_type(strong_src));
    }
    {
        std::vector<Rational> x(n, Rational(0));
        x[n - 1] = 1;
        expand_orbit(out, rep(std::move(x), 1), "C", strong_type(strong_src));
    }
    {
        std::vector<Rational> x(n, Rational(1));
        x[n - 1] = 0;
        expand_orbit(out, rep(std::move(x), 1), "Z", strong_type(strong_src));
    }
    {
        std::vector<Rational> x(n, Rational(1));
        x[n - 1] = 0;
        x[n - 2] = 0;
        expand_orbit(out, rep(std::move(x), 0), "Z*", strong_type(strong_src));
    }
    {
        std::vector<Rational> x(n, b);
        x[n - 1] = 1;
        expand_orbit(out, rep(std::move(x), Rational(2, n + 1)), "G", strong_type(strong_src));
    }
    {
        std::vector<Rational> x(n, e);
        x[n - 1] = 0;
        expand_orbit(out, rep(std::move(x), 0), "E",
                     restricted_only("restricted-type endpoint result (n>=3)"));
    }
    {
        std::vector<Rational> x(n, e);
        x[n - 1] = 1;
        expand_orbit(out, rep(std::move(x), 1), "P",
                     restricted_only("restricted-type endpoint result (n>=3)"));
    }
    {
        std::vector<Rational> x(n, e);
        x[n - 2] = 1;
        x[n - 1] = 0;
        expand_orbit(out, rep(std::move(x), Rational(1, n)), "K",
                     restricted_weak_only("restricted weak type by duality (n>=3)"));
    }
    if (n == 3) {
        const std::string src = "strong type at the boundary point N and its duals (n=3)";
        expand_orbit(out, pt(3, {{3, 5}, {3, 5}, {1, 5}}, {0, 1}), "N", strong_type(src));
        expand_orbit(out, pt(3, {{1, 1}, {3, 5}, {1, 5}}, {2, 5}), "N*1", strong_type(src));
        expand_orbit(out, pt(3, {{3, 5}, {3, 5}, {1, 1}}, {4, 5}), "N*3", strong_type(src));
    }
    return out;
}

/// Point strictly between a and b on the segment [a, b] (exact rational test).
bool strictly_between(const ExponentPoint& p, const ExponentPoint& a, const ExponentPoint& b) {
    // find a coordinate where a and b differ to compute the parameter
    auto coord = [&](const ExponentPoint& q, int i) { return i == q.n ? q.xr : q.x[i]; };
    int pivot = -1;
    for (int i = 0; i <= p.n; ++i)
        if (coord(a, i) != coord(b, i)) {
            pivot = i;
            break;
        }
    if (pivot < 0) return false;
    const Rational t = (coord(p, pivot) - coord(a, pivot)) / (coord(b, pivot) - coord(a, pivot));
    if (t <= 0 || t >= 1) return false;
    for (int i = 0; i <= p.n; ++i)
        if (coord(p, i) != coord(a, i) + t * (coord(b, i) - coord(a, i))) return false;
    return true;
}

Classification classify_n2(const ExponentPoint& p) {
    const Rational &x1 = p.x[0], &x2 = p.x[1], &xr = p.xr;

    // open CP and C'P' edges: strong away from P
    if (xr == 1 && x2 == 1 && x1 > 0 && x1 < Rational(1, 2))
        return strong_type("strong type on the open segment CP (n=2)");
    if (xr == 1 && x1 == 1 && x2 > 0 && x2 < Rational(1, 2))
        return strong_type("strong type on the open segment CP (n=2)");
    // open PP': strong by multilinear interpolation between the C-type corners
    if (xr == 1 && x1 + x2 == Rational(3, 2) && x1 > Rational(1, 2) && x1 < 1)
        return strong_type("strong type on the open segment PP' (n=2)");
    // each face 1/p_j = 0 is the quadrilateral O E K C; strong except at E and K
    if (x1 == 0 || x2 == 0)
        return strong_type("strong type on the flat face (decay estimate), away from E and K");
    // open BE (and BE'): strong type fails
    if (strictly_between(p, pt(2, {{1, 3}, {1, 3}}, {0, 1}), pt(2, {{0, 1}, {1, 2}}, {0, 1})) ||
        strictly_between(p, pt(2, {{1, 3}, {1, 3}}, {0, 1}), pt(2, {{1, 2}, {0, 1}}, {0, 1})))
        return fails_strong("strong type fails on the open segment BE (n=2)");
    // diagonal results: closed AM and MH carry strong type; open HB is not settled
    if (x1 == x2) {
        const auto A = pt(2, {{3, 4}, {3, 4}}, {1, 1});
        const auto M = pt(2, {{3, 5}, {3, 5}}, {2, 5});
        const auto H = pt(2, {{1, 2}, {1, 2}}, {1, 4});
        if (p == A || strictly_between(p, A, M) || strictly_between(p, M, H) || p == H)
            return strong_type("strong type on the diagonal segments AM and MH (n=2)");
    }
    return all_unknown("boundary point without a recorded result");
}

}  // namespace

std::vector<EndpointRecord> named_endpoints(int n) {
    if (n < 2) throw error("named_endpoints: n must be >= 2");
    if (n == 2) return catalogue_n2();
    return catalogue_general(n);
}

Classification classify(const NecessaryRegion& region, const ExponentPoint& point) {
    Containment cert = contains(region, point);
    if (!cert.member) {
        std::string what = "point " + point.str() + " is outside the region; violates";
        for (auto i : cert.violated) what += " " + region.inequalities[i].label(region.n);
        throw not_a_member(what, std::move(cert));
    }
    for (const auto& rec : named_endpoints(region.n))
        if (rec.point == point) return rec.cls;
    if (cert.tight.empty())
        return strong_type("multilinear interpolation at an interior point");
    if (region.n == 2) return classify_n2(point);
    return all_unknown("boundary point without a recorded result");
}

}  // namespace sphavg::region
