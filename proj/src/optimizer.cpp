#include "diamlab/optimizer.hpp"

#include "diamlab/detail/classifier.hpp"
#include "diamlab/measures.hpp"
#include "diamlab/rng.hpp"
#include "diamlab/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace diamlab {

namespace {

bool by_x(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Upper (sign = +1) or lower (sign = -1) strictly convex chain from K to L.
std::vector<Point> convex_chain(const std::vector<Point>& sorted, double sign) {
    std::vector<Point> h{pts::K};
    auto push = [&](Point p) {
        while (h.size() >= 2 && sign * cross(h.back() - h[h.size() - 2], p - h.back()) >= 0.0) h.pop_back();
        h.push_back(p);
    };
    for (Point p : sorted) push(p);
    push(pts::L);
    return {h.begin() + 1, h.end() - 1};
}

// Upper boundary height of the lens at abscissa x in [-1/2, 1/2].
double lens_height(double x) {
    const double a = 1.0 - (x + 0.5) * (x + 0.5);
    const double b = 1.0 - (x - 0.5) * (x - 0.5);
    return std::sqrt(std::max(0.0, std::min(a, b)));
}

}  // namespace

std::vector<Point> Candidate::polygon() const {
    std::vector<Point> v{pts::K};
    v.insert(v.end(), lower.begin(), lower.end());
    v.push_back(pts::L);
    v.insert(v.end(), upper.rbegin(), upper.rend());
    return v;
}

Figure Candidate::figure(const Tolerance& tol) const { return Figure::polygon(polygon(), tol); }

double candidate_mu(const Candidate& c) {
    const auto poly = c.polygon();
    const double total = polygon_area(poly);
    const double inside = polygon_disc_intersection_area(poly, reference_circle());
    return std::max(0.0, total - inside) / total;
}

Point project_to_lens(Point p) {
    const double dk = dist(p, pts::K);
    const double dl = dist(p, pts::L);
    if (dk <= 1.0 && dl <= 1.0) return p;
    Point best = p.y >= 0.0 ? pts::C : pts::D;
    double best_d = dist(p, best);
    auto consider = [&](Point center, double d, Point other) {
        if (d <= 1.0) return;
        const Point q = center + (1.0 / d) * (p - center);
        if (dist(q, other) <= 1.0 && dist(p, q) < best_d) {
            best = q;
            best_d = dist(p, q);
        }
    };
    consider(pts::K, dk, pts::L);
    consider(pts::L, dl, pts::K);
    return best;
}

RepairResult repair(Candidate raw, const Tolerance& tol) {
    RepairResult out;
    // Returns {points off their half-plane, points off the convex chain}.
    auto fix_chain = [&](std::vector<Point>& chain, double sign) -> std::pair<std::size_t, std::size_t> {
        std::vector<Point> kept;
        kept.reserve(chain.size());
        for (Point p : chain) {
            if (!(sign * p.y > tol.geom_eps)) continue;
            const Point q = project_to_lens(p);
            if (!(q == p)) ++out.projected;
            kept.push_back(q);
        }
        const std::size_t off_side = chain.size() - kept.size();
        std::sort(kept.begin(), kept.end(), by_x);
        chain = convex_chain(kept, sign);
        return {off_side, kept.size() - chain.size()};
    };
    const auto [upper_off, upper_hull] = fix_chain(raw.upper, 1.0);
    const auto [lower_off, lower_hull] = fix_chain(raw.lower, -1.0);
    out.below_axis_upper = upper_off;
    out.dropped_upper = upper_off + upper_hull;
    out.dropped_lower = lower_off + lower_hull;

    if (raw.upper.empty()) {
        out.reason = RejectReason::empty;
        return out;
    }
    for (Point u : raw.upper) {
        for (Point l : raw.lower) {
            if (dist(u, l) > 1.0 + tol.geom_eps) {
                out.reason = RejectReason::diameter;
                return out;
            }
        }
    }
    out.candidate = std::move(raw);
    return out;
}

void OptConfig::validate() const {
    if (n_points < 1) throw DomainError("n_points must be at least 1");
    if (iterations < 1) throw DomainError("iterations must be at least 1");
    if (restarts < 1) throw DomainError("restarts must be at least 1");
    if (!(step_initial > 0.0) || !std::isfinite(step_initial)) throw DomainError("initial step must be positive");
    if (!(step_decay > 0.0 && step_decay < 1.0)) throw DomainError("step decay must lie in (0, 1)");
}

namespace {

struct RestartResult {
    double best_mu = 0.0;
    Candidate best;
    std::vector<std::pair<std::size_t, double>> history;
    RejectionCounts rejections;
};

// Restores the upper chain to n points by splitting its longest edges. The
// new vertex is lifted off the chord by less than the neighbouring turns
// allow, so the chain stays strictly convex.
void refill(Candidate& c, std::size_t n) {
    while (c.upper.size() < n) {
        std::vector<Point> chain{pts::K};
        chain.insert(chain.end(), c.upper.begin(), c.upper.end());
        chain.push_back(pts::L);
        // turn at chain[i], as the angle between the incoming and outgoing edges
        auto turn = [&](std::size_t i) {
            if (i == 0 || i + 1 == chain.size()) return std::numbers::pi;
            const Point a = chain[i] - chain[i - 1];
            const Point b = chain[i + 1] - chain[i];
            return std::atan2(-cross(a, b), dot(a, b));
        };
        std::size_t best = 0;
        double best_len = -1.0;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const double len = dist(chain[i], chain[i + 1]);
            if (len > best_len) {
                best_len = len;
                best = i;
            }
        }
        const Point a = chain[best];
        const Point b = chain[best + 1];
        const double lift = 0.25 * best_len * std::min({turn(best), turn(best + 1), 0.5});
        const Point m = 0.5 * (a + b) + (lift / best_len) * Point{-(b - a).y, (b - a).x};
        if (!(lift > 0.0) || !(m.y > 0.0)) return;
        const Point q = project_to_lens(m);
        if (!(cross(q - a, b - q) < 0.0)) return;  // projection flattened it
        c.upper.insert(c.upper.begin() + static_cast<std::ptrdiff_t>(best), q);
    }
}

RestartResult run_restart(const OptConfig& cfg, std::size_t restart, const Tolerance& tol) {
    Rng rng(cfg.seed + restart);
    Candidate cur;
    const double scale = rng.uniform(0.5, 0.95);
    for (std::size_t i = 0; i < cfg.n_points; ++i) {
        const double x = -0.5 + static_cast<double>(i + 1) / static_cast<double>(cfg.n_points + 1);
        cur.upper.push_back({x, scale * lens_height(x)});
    }
    if (cfg.allow_lower) {
        const double depth = rng.uniform(0.02, 0.1);
        for (std::size_t i = 0; i < cfg.n_points; ++i) {
            const double x = -0.5 + static_cast<double>(i + 1) / static_cast<double>(cfg.n_points + 1);
            cur.lower.push_back({x, -depth * lens_height(x)});
        }
    }
    RepairResult init = repair(cur, tol);
    if (!init.candidate) throw std::logic_error("initial candidate is infeasible");
    RestartResult res;
    res.best = std::move(*init.candidate);
    refill(res.best, cfg.n_points);
    res.best_mu = candidate_mu(res.best);
    res.history.emplace_back(0, res.best_mu);

    const double span = static_cast<double>(std::max<std::size_t>(cfg.iterations - 1, 1));
    for (std::size_t k = 1; k <= cfg.iterations; ++k) {
        const double step = cfg.step_initial * std::pow(cfg.step_decay, static_cast<double>(k - 1) / span);
        Candidate trial = res.best;
        const std::size_t j = rng.index(trial.upper.size() + trial.lower.size());
        Point& p = j < trial.upper.size() ? trial.upper[j] : trial.lower[j - trial.upper.size()];
        const double dx = rng.normal();
        const double dy = rng.normal();
        p = p + step * Point{dx, dy};

        RepairResult r = repair(std::move(trial), tol);
        if (!r.candidate) {
            (r.reason == RejectReason::empty ? res.rejections.empty : res.rejections.diameter)++;
            continue;
        }
        if (r.below_axis_upper > 0) {
            ++res.rejections.below_axis;
            continue;
        }
        if (r.dropped_upper > 0) {
            ++res.rejections.convexity;
            refill(*r.candidate, cfg.n_points);
        }
        const double m = candidate_mu(*r.candidate);
        if (m > res.best_mu) {
            res.best_mu = m;
            res.best = std::move(*r.candidate);
            res.history.emplace_back(k, m);
        }
    }
    return res;
}

}  // namespace

OptTrace optimize_mu(const OptConfig& cfg, const Tolerance& tol) {
    cfg.validate();
    std::vector<RestartResult> results(cfg.restarts);
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                              static_cast<unsigned>(cfg.restarts)));
    auto work = [&](unsigned w) {
        for (std::size_t r = w; r < cfg.restarts; r += workers) results[r] = run_restart(cfg, r, tol);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::size_t best = 0;
    RejectionCounts counts;
    for (std::size_t r = 0; r < results.size(); ++r) {
        if (results[r].best_mu > results[best].best_mu) best = r;
        counts.below_axis += results[r].rejections.below_axis;
        counts.convexity += results[r].rejections.convexity;
        counts.diameter += results[r].rejections.diameter;
        counts.empty += results[r].rejections.empty;
    }
    RestartResult& win = results[best];
    if (win.best_mu > closed_form::mu_bound + 1e-6) {
        throw std::logic_error("optimizer exceeded the mixed-triangle bound");
    }
    Figure fig = win.best.figure(tol);
    return OptTrace{win.best_mu, std::move(win.best), std::move(fig), best, std::move(win.history), counts};
}

// ---------------------------------------------------------------------------
// Perturbation audit
// ---------------------------------------------------------------------------

namespace {

bool is_kl_segment(const Edge& e) {
    return !e.is_arc() && ((e.start == pts::K && e.end == pts::L) || (e.start == pts::L && e.end == pts::K));
}

Point outward_normal(const Edge& e, Point at) {
    if (e.is_arc()) {
        const Point radial = (1.0 / e.radius) * (at - e.center);
        return e.orientation == Orientation::ccw ? radial : -1.0 * radial;
    }
    const Point d = e.end - e.start;
    const double n = norm(d);
    return {d.y / n, -d.x / n};
}

// Replaces the edge K -> L with the given path from K to L.
Figure with_bottom(const Figure& f, std::size_t kl, const std::vector<Edge>& path, const Tolerance& tol) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i == kl) {
            edges.insert(edges.end(), path.begin(), path.end());
        } else {
            edges.push_back(f[i]);
        }
    }
    return Figure(std::move(edges), tol);
}

// mu of f united with the rectangle [-1/2, 1/2] x [-h, 0], by sampling.
double union_rect_mu(const Figure& f, double h, const Tolerance& tol) {
    constexpr std::uint64_t kSamples = 1'000'000;
    const detail::PointClassifier cls(f, tol.geom_eps);
    BoundingBox box = bounding_box(f);
    box.min = {std::min(box.min.x, pts::K.x), std::min(box.min.y, -h)};
    box.max = {std::max(box.max.x, pts::L.x), std::max(box.max.y, 0.0)};
    const Circle ref = reference_circle();
    Rng rng(0x5eed, 0);
    std::uint64_t inside = 0;
    std::uint64_t outside_disc = 0;
    for (std::uint64_t i = 0; i < kSamples; ++i) {
        const Point p{rng.uniform(box.min.x, box.max.x), rng.uniform(box.min.y, box.max.y)};
        const bool in_rect = p.x >= pts::K.x && p.x <= pts::L.x && p.y >= -h && p.y <= 0.0;
        if (!in_rect && cls.classify(p) == Location::outside) continue;
        ++inside;
        if (!ref.in_disc(p)) ++outside_disc;
    }
    return static_cast<double>(outside_disc) / static_cast<double>(inside);
}

}  // namespace

PerturbationReport perturbation_audit(const Figure& f, const Tolerance& tol) {
    const double d = diameter(f, tol);
    if (contains(f, pts::K, tol) != Location::boundary || contains(f, pts::L, tol) != Location::boundary ||
        std::abs(d - 1.0) > 1e-9) {
        throw DomainError("figure does not share the diameter KL");
    }
    const Circle ref = reference_circle();
    const double mu0 = mu(f, ref, tol).mu;
    PerturbationReport rep;

    std::optional<std::size_t> kl;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (is_kl_segment(f[i])) {
            kl = i;
            continue;
        }
        const Point mid = f[i].at(0.5);
        const Point n = outward_normal(f[i], mid);
        for (double eps : {1e-3, 1e-2}) {
            BulgeCheck b;
            b.edge = i;
            b.epsilon = eps;
            b.moved = mid + eps * n;
            b.dist_k = dist(b.moved, pts::K);
            b.dist_l = dist(b.moved, pts::L);
            b.violates = b.dist_k > 1.0 + tol.geom_eps || b.dist_l > 1.0 + tol.geom_eps;
            rep.bulges.push_back(b);
        }
    }

    for (double h : {1e-3, 1e-2}) {
        const Point kb{pts::K.x, -h};
        const Point lb{pts::L.x, -h};
        StripCheck rect{"rectangle", h, mu0};
        if (kl) {
            const Figure g = with_bottom(f, *kl, {Edge::segment(pts::K, kb), Edge::segment(kb, lb),
                                                   Edge::segment(lb, pts::L)}, tol);
            rect.mu_after = mu(g, ref, tol).mu;
            rect.diameter_after = diameter(g, tol);
        } else {
            rect.exact = false;
            rect.mu_after = union_rect_mu(f, h, tol);
            rect.diameter_after = std::max({d, farthest_distance(f, kb), farthest_distance(f, lb), dist(kb, lb)});
        }
        rect.mu_decreased = rect.mu_after < mu0;
        rect.violates_diameter = rect.diameter_after > 1.0 + tol.geom_eps;
        rep.strips.push_back(rect);

        if (kl) {
            // Shallow circular cap through K and L: stays inside the Reuleaux
            // cap below KL, so convexity and unit diameter both survive.
            const double radius = (0.25 + h * h) / (2.0 * h);
            const Edge cap = Edge::arc(pts::K, pts::L, {0.0, radius - h}, radius, Orientation::ccw);
            const Figure g = with_bottom(f, *kl, {cap}, tol);
            StripCheck c{"cap", h, mu0};
            c.mu_after = mu(g, ref, tol).mu;
            c.diameter_after = diameter(g, tol);
            c.mu_decreased = c.mu_after < mu0;
            c.violates_diameter = c.diameter_after > 1.0 + tol.geom_eps;
            rep.strips.push_back(c);
        }
    }

    rep.bulge_flagged = !rep.bulges.empty() &&
                        std::all_of(rep.bulges.begin(), rep.bulges.end(), [](const BulgeCheck& b) { return b.violates; });
    rep.strip_flagged = std::all_of(rep.strips.begin(), rep.strips.end(), [](const StripCheck& s) { return s.degrades(); });
    return rep;
}

}  // namespace diamlab
