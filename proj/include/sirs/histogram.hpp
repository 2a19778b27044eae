#pragma once
// Fixed-box 3-D histograms over (x, y, z). Counts are integers so merges
// are exact regardless of order; mass is the normalized copy.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sirs {

struct HistogramCounts {
    std::size_t bins = 0;
    double edge = 0.0;  // support box is [0, edge]^3
    std::vector<std::uint64_t> counts;

    HistogramCounts() = default;
    HistogramCounts(std::size_t b, double e) : bins(b), edge(e), counts(b * b * b, 0) {}

    std::size_t axis_index(double v) const {
        if (v <= 0.0) return 0;
        const double f = v / edge * static_cast<double>(bins);
        auto i = static_cast<std::size_t>(f);
        return i >= bins ? bins - 1 : i;  // out-of-box samples land in edge bins
    }

    void add(double x, double y, double z) {
        counts[(axis_index(x) * bins + axis_index(y)) * bins + axis_index(z)] += 1;
    }

    void merge(const HistogramCounts& other) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

struct Histogram3 {
    std::size_t bins = 0;
    double edge = 0.0;
    std::vector<double> mass;  // sums to 1 when populated

    static Histogram3 normalized(const HistogramCounts& c) {
        Histogram3 h;
        h.bins = c.bins;
        h.edge = c.edge;
        h.mass.resize(c.counts.size(), 0.0);
        const std::uint64_t t = c.total();
        if (t > 0) {
            const double inv = 1.0 / static_cast<double>(t);
            for (std::size_t i = 0; i < c.counts.size(); ++i)
                h.mass[i] = static_cast<double>(c.counts[i]) * inv;
        }
        return h;
    }

    bool populated() const {
        for (double m : mass)
            if (m > 0.0) return true;
        return false;
    }
};

/// Total-variation distance between two histograms on the same bin layout.
inline double total_variation(const Histogram3& a, const Histogram3& b) {
    if (a.mass.size() != b.mass.size())
        throw std::invalid_argument("total_variation: bin layouts differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.mass.size(); ++i) {
        const double d = a.mass[i] - b.mass[i];
        s += d < 0.0 ? -d : d;
    }
    return 0.5 * s;
}

}  // namespace sirs
