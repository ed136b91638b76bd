#include "diamlab/oracle.hpp"

#include "diamlab/detail/classifier.hpp"
#include "diamlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

namespace diamlab {

namespace {

struct Counts {
    std::uint64_t inside = 0;
    std::uint64_t outside_disc = 0;
};

using ChunkFn = std::function<Counts(Rng&, std::uint64_t)>;

Counts run_chunks(std::uint64_t samples, std::uint64_t seed, const ChunkFn& fn) {
    const std::uint64_t chunks = (samples + kOracleChunk - 1) / kOracleChunk;
    const unsigned workers = static_cast<unsigned>(
        std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(chunks, 1)));
    std::vector<Counts> partial(workers);
    auto work = [&](unsigned w) {
        for (std::uint64_t c = w; c < chunks; c += workers) {
            Rng rng(seed, c);
            const std::uint64_t n = std::min(kOracleChunk, samples - c * kOracleChunk);
            const Counts k = fn(rng, n);
            partial[w].inside += k.inside;
            partial[w].outside_disc += k.outside_disc;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    Counts total;
    for (const auto& k : partial) {
        total.inside += k.inside;
        total.outside_disc += k.outside_disc;
    }
    return total;
}

BoundingBox sampling_box(const Figure& f) {
    const BoundingBox box = bounding_box(f);
    if (!(box.width() > 0.0) || !(box.height() > 0.0)) throw DegenerateFigure("bounding box is degenerate");
    return box;
}

void check_samples(std::uint64_t samples) {
    if (samples < kMinOracleSamples) throw DomainError("oracle needs at least 10^4 samples");
}

}  // namespace

McEstimate mc_area(const Figure& f, std::uint64_t samples, std::uint64_t seed, const Tolerance& tol) {
    check_samples(samples);
    const BoundingBox box = sampling_box(f);
    const detail::PointClassifier cls(f, tol.geom_eps);
    const Counts k = run_chunks(samples, seed, [&](Rng& rng, std::uint64_t n) {
        Counts c;
        for (std::uint64_t i = 0; i < n; ++i) {
            const Point p{rng.uniform(box.min.x, box.max.x), rng.uniform(box.min.y, box.max.y)};
            if (cls.classify(p) != Location::outside) ++c.inside;
        }
        return c;
    });
    const double frac = static_cast<double>(k.inside) / static_cast<double>(samples);
    McEstimate est;
    est.value = frac * box.area();
    est.std_error = box.area() * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    est.samples = samples;
    est.hits = k.inside;
    est.seed = seed;
    est.box = box;
    return est;
}

McEstimate mc_mu(const Figure& f, const Circle& c, std::uint64_t samples, std::uint64_t seed, const Tolerance& tol) {
    check_samples(samples);
    const BoundingBox box = sampling_box(f);
    const detail::PointClassifier cls(f, tol.geom_eps);
    const double r2 = c.radius * c.radius;
    const Counts k = run_chunks(samples, seed, [&](Rng& rng, std::uint64_t n) {
        Counts out;
        for (std::uint64_t i = 0; i < n; ++i) {
            const Point p{rng.uniform(box.min.x, box.max.x), rng.uniform(box.min.y, box.max.y)};
            if (cls.classify(p) == Location::outside) continue;
            ++out.inside;
            const Point d = p - c.center;
            if (dot(d, d) > r2) ++out.outside_disc;
        }
        return out;
    });
    if (k.inside == 0) throw DegenerateFigure("no samples landed inside the figure");
    const double frac = static_cast<double>(k.outside_disc) / static_cast<double>(k.inside);
    McEstimate est;
    est.value = frac;
    est.std_error = std::sqrt(frac * (1.0 - frac) / static_cast<double>(k.inside));
    est.samples = samples;
    est.hits = k.inside;
    est.seed = seed;
    est.box = box;
    return est;
}

}  // namespace diamlab
