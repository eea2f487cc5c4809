#include "locgpd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace locgpd::geom {

namespace {
constexpr double pi = std::numbers::pi;
}

UnitVector3::UnitVector3(double x_, double y_, double z_) {
    double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    if (n < 1e-12) throw BadParams("UnitVector3: zero vector");
    x = x_ / n;
    y = y_ / n;
    z = z_ / n;
}

UnitVector3 UnitVector3::cross_raw(const UnitVector3& o) const {
    UnitVector3 r;
    r.x = y * o.z - z * o.y;
    r.y = z * o.x - x * o.z;
    r.z = x * o.y - y * o.x;
    return r;
}

bool UnitVector3::near(const UnitVector3& o, double tol) const {
    return std::abs(x - o.x) < tol && std::abs(y - o.y) < tol && std::abs(z - o.z) < tol;
}

double signed_triangle_area(const UnitVector3& x, const UnitVector3& y,
                            const UnitVector3& z, double tol) {
    auto antipodal = [&](const UnitVector3& a, const UnitVector3& b) {
        return std::abs(a.x + b.x) < tol && std::abs(a.y + b.y) < tol &&
               std::abs(a.z + b.z) < tol;
    };
    if (antipodal(x, y) || antipodal(y, z) || antipodal(x, z))
        throw DegenerateTriangle("antipodal vertex pair");
    UnitVector3 c = y.cross_raw(z);
    double num = x.x * c.x + x.y * c.y + x.z * c.z;
    double den = 1.0 + x.dot(y) + y.dot(z) + z.dot(x);
    double a = 2.0 * std::atan2(num, den);
    if (a <= -2.0 * pi) a += 4.0 * pi;   // report in (-2pi, 2pi]
    return a;
}

std::optional<SphereArrow> mult_sphere(const SphereArrow& g, const SphereArrow& h) {
    if (!h.y.near(g.x, compose_tol))
        throw NotComposable("mult_sphere: target of h must be source of g");
    // x + z antipodal: result would leave the groupoid
    if (std::abs(h.x.x + g.y.x) < compose_tol && std::abs(h.x.y + g.y.y) < compose_tol &&
        std::abs(h.x.z + g.y.z) < compose_tol)
        return std::nullopt;
    double area;
    try {
        area = signed_triangle_area(h.x, g.x, g.y);
    } catch (const DegenerateTriangle&) {
        return std::nullopt;
    }
    if (!(std::abs(area) < pi - sphere_window_tol)) return std::nullopt;
    return SphereArrow{g.y, h.x, g.a + h.a + area};
}

double reduce_mod_4pi(double a) {
    double r = std::fmod(a, 4.0 * pi);
    if (r <= -2.0 * pi) r += 4.0 * pi;
    if (r > 2.0 * pi) r -= 4.0 * pi;
    return r;
}

TetrahedronWitness tetrahedron_witness() {
    const double s = 1.0 / std::sqrt(3.0);
    UnitVector3 v1(s, s, s), v2(s, -s, -s), v3(-s, s, -s), v4(-s, -s, s);
    auto mid = [](const UnitVector3& a, const UnitVector3& b) {
        return UnitVector3(a.x + b.x, a.y + b.y, a.z + b.z);
    };
    TetrahedronWitness out;
    out.points = {v1, mid(v1, v2), v2, mid(v2, v3), v3, mid(v3, v4), v4};
    const auto& x = out.points;
    SphereArrow A{x[1], x[0], 0}, B{x[2], x[1], 0}, C{x[3], x[2], 0};
    SphereArrow D{x[4], x[3], 0}, E{x[5], x[4], 0}, F{x[6], x[5], 0};

    auto need = [](std::optional<SphereArrow> v) {
        if (!v) throw Error("tetrahedron witness: undefined intermediate product");
        return *v;
    };
    // F(E((D(CB))A))
    auto cb = need(mult_sphere(C, B));
    auto dcb = need(mult_sphere(D, cb));
    auto dcba = need(mult_sphere(dcb, A));
    auto edcba = need(mult_sphere(E, dcba));
    out.left = need(mult_sphere(F, edcba));
    // ((F((ED)C))B)A
    auto ed = need(mult_sphere(E, D));
    auto edc = need(mult_sphere(ed, C));
    auto fedc = need(mult_sphere(F, edc));
    auto fedcb = need(mult_sphere(fedc, B));
    out.right = need(mult_sphere(fedcb, A));
    return out;
}

std::optional<LambdaArrow> mult_lambda(const LambdaArrow& g, const LambdaArrow& h,
                                       double lambda) {
    if (!h.y.near(g.x, compose_tol) || !h.yp.near(g.xp, compose_tol))
        throw NotComposable("mult_lambda: endpoints do not meet");
    double a1, a2;
    try {
        a1 = signed_triangle_area(h.x, g.x, g.y);
        a2 = signed_triangle_area(h.xp, g.xp, g.yp);
    } catch (const DegenerateTriangle&) {
        return std::nullopt;
    }
    if (std::abs(h.x.x + g.y.x) < compose_tol && std::abs(h.x.y + g.y.y) < compose_tol &&
        std::abs(h.x.z + g.y.z) < compose_tol)
        return std::nullopt;
    if (std::abs(h.xp.x + g.yp.x) < compose_tol && std::abs(h.xp.y + g.yp.y) < compose_tol &&
        std::abs(h.xp.z + g.yp.z) < compose_tol)
        return std::nullopt;
    if (!(std::abs(a1) < pi - sphere_window_tol)) return std::nullopt;
    // second window: pi/|lambda| as stated, clamped to pi so the mod-4pi
    // quadrangle identity upgrades to exact equality for |lambda| < 1 as
    // well (void when lambda = 0)
    if (lambda != 0.0) {
        double window = std::min(pi, pi / std::abs(lambda));
        if (!(std::abs(a2) < window - sphere_window_tol)) return std::nullopt;
    }
    return LambdaArrow{g.y, g.yp, h.x, h.xp, g.a + h.a + a1 + lambda * a2};
}

PeriodLattice monodromy_lattice_rational(long long p, long long q) {
    if (q == 0) throw BadParams("monodromy_lattice: q must be nonzero");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    PeriodLattice out;
    out.rational = true;
    out.p = p;
    out.q = q;
    out.lambda = static_cast<double>(p) / static_cast<double>(q);
    long long g = std::gcd(std::abs(p), q);
    if (g == 0) g = q;   // p == 0
    out.generator = 4.0 * pi * static_cast<double>(g) / static_cast<double>(q);
    out.min_gap = *out.generator;
    return out;
}

PeriodLattice monodromy_lattice_scan(double lambda, long long N, double evidence_threshold) {
    PeriodLattice out;
    out.lambda = lambda;
    double best = 1.0;   // m = 1, n = 0
    out.best_m = 1;
    out.best_n = 0;
    for (long long n = 1; n <= N; ++n) {
        double target = -lambda * static_cast<double>(n);
        long long m = std::llround(target);
        m = std::clamp(m, -N, N);
        double gap = std::abs(static_cast<double>(m) + lambda * static_cast<double>(n));
        if (gap > 0 && gap < best) {
            best = gap;
            out.best_m = m;
            out.best_n = n;
        }
    }
    out.min_gap = 4.0 * pi * best;
    out.nondiscrete_evidence = best < evidence_threshold;
    return out;
}

namespace {

UnitVector3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    while (true) {
        double x = nd(rng), y = nd(rng), z = nd(rng);
        double n = std::sqrt(x * x + y * y + z * z);
        if (n > 1e-6) return UnitVector3(x, y, z);
    }
}

} // namespace

QuadCheck quad_check_sphere(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    QuadCheck out;
    while (out.samples < samples) {
        UnitVector3 z = random_unit(rng), y = random_unit(rng), x = random_unit(rng),
                    w = random_unit(rng);
        SphereArrow g{z, y, ud(rng)}, h{y, x, ud(rng)}, k{x, w, ud(rng)};
        std::optional<SphereArrow> gh, gh_k, hk, g_hk;
        try {
            gh = mult_sphere(g, h);
            if (gh) gh_k = mult_sphere(*gh, k);
            hk = mult_sphere(h, k);
            if (hk) g_hk = mult_sphere(g, *hk);
        } catch (const NotComposable&) {
            continue;
        }
        if (!gh_k || !g_hk) continue;
        ++out.samples;
        out.max_deviation = std::max(out.max_deviation, std::abs(gh_k->a - g_hk->a));
    }
    return out;
}

QuadCheck quad_check_lambda(double lambda, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    QuadCheck out;
    while (out.samples < samples) {
        UnitVector3 z = random_unit(rng), y = random_unit(rng), x = random_unit(rng),
                    w = random_unit(rng);
        UnitVector3 zp = random_unit(rng), yp = random_unit(rng), xp = random_unit(rng),
                    wp = random_unit(rng);
        LambdaArrow g{z, zp, y, yp, ud(rng)}, h{y, yp, x, xp, ud(rng)},
            k{x, xp, w, wp, ud(rng)};
        std::optional<LambdaArrow> gh, gh_k, hk, g_hk;
        try {
            gh = mult_lambda(g, h, lambda);
            if (gh) gh_k = mult_lambda(*gh, k, lambda);
            hk = mult_lambda(h, k, lambda);
            if (hk) g_hk = mult_lambda(g, *hk, lambda);
        } catch (const NotComposable&) {
            continue;
        }
        if (!gh_k || !g_hk) continue;
        ++out.samples;
        out.max_deviation = std::max(out.max_deviation, std::abs(gh_k->a - g_hk->a));
    }
    return out;
}

bool segment_clears_disk(double px, double py, double qx, double qy) {
    double dx = qx - px, dy = qy - py;
    double l2 = dx * dx + dy * dy;
    double t = 0;
    if (l2 > 0) t = std::clamp(((cover_disk_cx - px) * dx + (cover_disk_cy - py) * dy) / l2,
                               0.0, 1.0);
    double ex = px + t * dx - cover_disk_cx;
    double ey = py + t * dy - cover_disk_cy;
    return ex * ex + ey * ey > cover_disk_r * cover_disk_r;
}

int ray_crossings(double px, double py, double qx, double qy) {
    // reference ray: {(cx, y) : y < cy}; sign +1 for left-to-right crossings
    if (px == qx) return 0;
    double t = (cover_disk_cx - px) / (qx - px);
    if (!(t > 0.0 && t < 1.0)) return 0;
    double y = py + t * (qy - py);
    if (y >= cover_disk_cy) return 0;
    return qx > px ? 1 : -1;
}

namespace {

bool in_ball_sheet(const CoverPoint& p) {
    return p.w == 0 && p.px * p.px + p.py * p.py < cover_ball_r * cover_ball_r;
}

} // namespace

std::optional<CoverPoint> cover_mult(const CoverPoint& g, const CoverPoint& h) {
    double sx = g.px + h.px, sy = g.py + h.py;
    if (in_ball_sheet(h)) {
        if (!segment_clears_disk(g.px, g.py, sx, sy))
            throw SegmentHitsDisk("translated segment meets the removed disk");
        return CoverPoint{sx, sy, g.w + ray_crossings(g.px, g.py, sx, sy)};
    }
    if (in_ball_sheet(g)) {
        if (!segment_clears_disk(h.px, h.py, sx, sy))
            throw SegmentHitsDisk("translated segment meets the removed disk");
        return CoverPoint{sx, sy, h.w + ray_crossings(h.px, h.py, sx, sy)};
    }
    return std::nullopt;
}

CoverWitness cover_witness() {
    CoverWitness out;
    out.a = {0.58, 0.0, 0};
    out.b = {0.63, 0.36, 0};
    out.c = {0.0, -0.72, 0};
    auto ab = cover_mult(out.a, out.b);
    auto bc = cover_mult(out.b, out.c);
    if (!ab || !bc) throw Error("cover witness: first products undefined");
    auto ab_c = cover_mult(*ab, out.c);
    auto a_bc = cover_mult(out.a, *bc);
    if (!ab_c || !a_bc) throw Error("cover witness: triple products undefined");
    out.ab_c = *ab_c;
    out.a_bc = *a_bc;
    return out;
}

namespace {

std::string fmt_area(double a) {
    long long q = std::llround(a * 1e6);
    std::string s = q < 0 ? "m" : "";
    return s + std::to_string(std::llabs(q));
}

} // namespace

FiniteExport tetra_table() {
    auto wit = tetrahedron_witness();
    const auto& x = wit.points;
    FiniteExport out;
    FiniteLocalGroupoid& t = out.table;
    for (int i = 1; i <= 7; ++i) t.objects.push_back("x" + std::to_string(i));

    struct Entry {
        SphereArrow arrow;
        int src, tgt;
    };
    std::vector<Entry> arrows;
    std::map<std::tuple<int, int, long long>, int> index;   // (src, tgt, area quantum)
    auto key = [&](int src, int tgt, double a) {
        return std::tuple<int, int, long long>{src, tgt, std::llround(a * 1e7)};
    };
    auto intern = [&](int src, int tgt, const SphereArrow& sa, const std::string& name) {
        auto k = key(src, tgt, sa.a);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(arrows.size());
        index[k] = id;
        arrows.push_back({sa, src, tgt});
        t.arrows.push_back({name, src, tgt});
        return id;
    };

    t.unit_of.resize(7);
    for (int i = 0; i < 7; ++i) {
        SphereArrow u{x[i], x[i], 0.0};
        t.unit_of[i] = intern(i, i, u, "u" + std::to_string(i + 1));
    }
    const char* names = "ABCDEF";
    for (int i = 0; i < 6; ++i) {
        SphereArrow sa{x[i + 1], x[i], 0.0};
        intern(i, i + 1, sa, std::string(1, names[i]));
    }

    // closure under defined products
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = arrows.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                if (arrows[j].tgt != arrows[i].src) continue;
                auto p = mult_sphere(arrows[i].arrow, arrows[j].arrow);
                if (!p) continue;
                auto k = key(arrows[j].src, arrows[i].tgt, p->a);
                if (!index.count(k)) {
                    intern(arrows[j].src, arrows[i].tgt, *p,
                           "p" + std::to_string(arrows.size()) + "_" + fmt_area(p->a));
                    grew = true;
                }
            }
    }
    // multiplication table over the closed set
    for (std::size_t i = 0; i < arrows.size(); ++i)
        for (std::size_t j = 0; j < arrows.size(); ++j) {
            if (arrows[j].tgt != arrows[i].src) continue;
            auto p = mult_sphere(arrows[i].arrow, arrows[j].arrow);
            if (!p) continue;
            auto k = key(arrows[j].src, arrows[i].tgt, p->a);
            t.mult[{static_cast<int>(i), static_cast<int>(j)}] = index.at(k);
        }
    // V: units only (reversed arrows are not sampled)
    for (int i = 0; i < 7; ++i) t.inv[t.unit_of[i]] = t.unit_of[i];
    return out;
}

FiniteExport cover_witness_table() {
    FiniteExport out;
    FiniteLocalGroupoid& t = out.table;
    t.objects = {"pt"};

    // centi-coordinate lattice keeps point matching exact
    const std::vector<std::pair<int, int>> base = {
        {0, 0},  {58, 0},   {121, 36}, {121, -36}, {63, 36},
        {63, -36}, {0, -72}, {-58, 0},  {-63, -36}, {-63, 36}, {0, 72},
    };
    struct Entry {
        int cx, cy, w;
    };
    std::vector<Entry> arrows;
    std::map<std::tuple<int, int, int>, int> index;
    auto intern = [&](int cx, int cy, int w) {
        auto k = std::tuple{cx, cy, w};
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(arrows.size());
        index[k] = id;
        arrows.push_back({cx, cy, w});
        std::string nx = cx < 0 ? "m" + std::to_string(-cx) : std::to_string(cx);
        std::string ny = cy < 0 ? "m" + std::to_string(-cy) : std::to_string(cy);
        std::string nw = w < 0 ? "m" + std::to_string(-w) : std::to_string(w);
        t.arrows.push_back({"c" + nx + "_" + ny + "_w" + nw, 0, 0});
        return id;
    };
    intern(0, 0, 0);
    for (auto [cx, cy] : base)
        for (int w : {-1, 0, 1}) intern(cx, cy, w);
    t.unit_of = {index.at({0, 0, 0})};

    auto as_point = [](const Entry& e) {
        return CoverPoint{e.cx / 100.0, e.cy / 100.0, e.w};
    };
    for (std::size_t i = 0; i < arrows.size(); ++i)
        for (std::size_t j = 0; j < arrows.size(); ++j) {
            std::optional<CoverPoint> p;
            try {
                p = cover_mult(as_point(arrows[i]), as_point(arrows[j]));
            } catch (const SegmentHitsDisk&) {
                continue;
            }
            if (!p) continue;
            int cx = arrows[i].cx + arrows[j].cx;
            int cy = arrows[i].cy + arrows[j].cy;
            auto k = std::tuple{cx, cy, p->w};
            auto it = index.find(k);
            if (it == index.end()) {
                out.dropped_pairs.push_back(t.arrows[i].id + "*" + t.arrows[j].id);
                continue;
            }
            t.mult[{static_cast<int>(i), static_cast<int>(j)}] = it->second;
        }
    // V: sampled elements with a two-sided inverse in the table
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        auto k = std::tuple{-arrows[i].cx, -arrows[i].cy, -arrows[i].w};
        auto it = index.find(k);
        if (it == index.end()) continue;
        int j = it->second;
        auto li = t.mult.find({static_cast<int>(i), j});
        auto ri = t.mult.find({j, static_cast<int>(i)});
        if (li != t.mult.end() && ri != t.mult.end() && li->second == t.unit_of[0] &&
            ri->second == t.unit_of[0])
            t.inv[static_cast<int>(i)] = j;
    }
    return out;
}

FiniteLocalGroupoid units_table(int n_objects) {
    if (n_objects < 1) throw BadParams("units_table: need at least one object");
    FiniteLocalGroupoid t;
    for (int i = 0; i < n_objects; ++i) t.objects.push_back("v" + std::to_string(i));
    t.unit_of.resize(n_objects);
    for (int i = 0; i < n_objects; ++i) {
        t.unit_of[i] = static_cast<int>(t.arrows.size());
        t.arrows.push_back({"u" + std::to_string(i), i, i});
    }
    for (int i = 0; i < n_objects; ++i) {
        t.mult[{t.unit_of[i], t.unit_of[i]}] = t.unit_of[i];
        t.inv[t.unit_of[i]] = t.unit_of[i];
    }
    return t;
}

} // namespace locgpd::geom
