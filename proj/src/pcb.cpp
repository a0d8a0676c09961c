#include "pcbdec/pcb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pcbdec {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

PcbDecomposition::PcbDecomposition(Frame frame, std::vector<PcbBlock> blocks)
    : frame_(std::move(frame)), blocks_(std::move(blocks)) {
    Subset covered = 0;
    double total_prob = 0.0;
    for (const auto& block : blocks_) {
        if (block.members == 0)
            throw ValidationError("decomposition block is empty");
        if ((block.members & covered) != 0)
            throw ValidationError("decomposition blocks overlap");
        covered |= block.members;
        if (block.prob < -kMassTolerance)
            throw ValidationError("negative block probability");
        total_prob += block.prob;
        double max_pi = 0.0;
        for (const auto& [idx, pi] : block.possibility) {
            if (!subset_contains(block.members, idx))
                throw ValidationError("possibility assigned outside its block");
            if (pi < 0.0 || pi > 1.0 + kMassTolerance)
                throw ValidationError("possibility degree outside [0,1]");
            max_pi = std::max(max_pi, pi);
        }
        if (block.prob > kMassTolerance && std::abs(max_pi - 1.0) > kMassTolerance)
            throw ValidationError("block with positive probability must contain an outcome "
                                  "at possibility 1");
    }
    if (covered != frame_.full())
        throw ValidationError("decomposition blocks do not cover the frame");
    if (std::abs(total_prob - 1.0) > kMassTolerance)
        throw ValidationError("block probabilities sum to " + std::to_string(total_prob) +
                              ", expected 1");
}

PcbDetectResult detect_pcb(const MassFunction& m) {
    const Frame& frame = m.frame();
    const std::size_t n = frame.size();

    UnionFind uf(n);
    for (const auto& [focus, mass] : m.focal()) {
        (void)mass;
        std::size_t anchor = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!subset_contains(focus, i)) continue;
            if (anchor == n)
                anchor = i;
            else
                uf.unite(anchor, i);
        }
    }

    // Group foci by component; the block is the union of its foci.
    std::map<std::size_t, std::vector<Subset>> component_foci;
    for (const auto& [focus, mass] : m.focal()) {
        (void)mass;
        std::size_t anchor = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (subset_contains(focus, i)) {
                anchor = i;
                break;
            }
        component_foci[uf.find(anchor)].push_back(focus);
    }

    std::vector<PcbBlock> blocks;
    for (auto& [root, foci] : component_foci) {
        (void)root;
        std::sort(foci.begin(), foci.end(), [](Subset a, Subset b) {
            return subset_size(a) != subset_size(b) ? subset_size(a) < subset_size(b) : a < b;
        });
        Subset members = 0;
        for (std::size_t j = 0; j + 1 < foci.size(); ++j)
            if ((foci[j] & ~foci[j + 1]) != 0)
                return NotPcb{foci[j], foci[j + 1]};
        for (Subset f : foci) members |= f;

        PcbBlock block;
        block.members = members;
        block.prob = m.plausibility(members);
        for (std::size_t i = 0; i < n; ++i)
            if (subset_contains(members, i))
                block.possibility[i] =
                    block.prob > 0.0 ? m.plausibility(singleton(i)) / block.prob : 0.0;
        blocks.push_back(std::move(block));
    }

    // Outcomes in no focus form one zero-probability block.
    Subset covered = 0;
    for (const auto& block : blocks) covered |= block.members;
    const Subset rest = frame.full() & ~covered;
    if (rest != 0) {
        PcbBlock zero;
        zero.members = rest;
        for (std::size_t i = 0; i < n; ++i)
            if (subset_contains(rest, i)) zero.possibility[i] = 0.0;
        blocks.push_back(std::move(zero));
    }

    std::sort(blocks.begin(), blocks.end(), [](const PcbBlock& a, const PcbBlock& b) {
        return (a.members & ~(a.members - 1)) < (b.members & ~(b.members - 1));
    });
    return PcbDecomposition(frame, std::move(blocks));
}

PcbDecomposition decompose(const MassFunction& m) {
    PcbDetectResult r = detect_pcb(m);
    if (auto* bad = std::get_if<NotPcb>(&r))
        throw StructureError("not partially consonant: foci " +
                             m.frame().describe_subset(bad->focus_a) + " and " +
                             m.frame().describe_subset(bad->focus_b) +
                             " share a block but are not nested");
    return std::get<PcbDecomposition>(std::move(r));
}

MassFunction recompose(const PcbDecomposition& d) {
    std::map<Subset, double> focal;
    for (const auto& block : d.blocks()) {
        if (block.prob <= kMassTolerance) continue;
        // Nested level sets of the block possibility.
        std::vector<std::pair<double, std::size_t>> ordered;
        for (const auto& [idx, pi] : block.possibility)
            if (pi > 0.0) ordered.emplace_back(pi, idx);
        std::sort(ordered.begin(), ordered.end(), std::greater<>());

        Subset level = 0;
        std::size_t j = 0;
        while (j < ordered.size()) {
            const double v = ordered[j].first;
            while (j < ordered.size() && ordered[j].first == v) {
                level |= singleton(ordered[j].second);
                ++j;
            }
            const double next = j < ordered.size() ? ordered[j].first : 0.0;
            const double mass = block.prob * (v - next);
            if (mass > 0.0) focal[level] += mass;
        }
    }
    return MassFunction::renormalized(d.frame(), std::move(focal));
}

LikelihoodVector::LikelihoodVector(Frame frame, std::vector<double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
    if (values_.size() != frame_.size())
        throw ValidationError("likelihood vector length must match the frame");
    double max_v = 0.0;
    for (double v : values_) {
        if (v < 0.0 || !std::isfinite(v))
            throw ValidationError("likelihoods must be finite and nonnegative");
        max_v = std::max(max_v, v);
    }
    if (max_v <= 0.0)
        throw NumericError("degenerate likelihood: all components are zero");
    for (double& v : values_) v /= max_v;
}

MassFunction pcb_from_likelihood(const LikelihoodVector& tau,
                                 const std::vector<Subset>& blocks, double lambda) {
    const Frame& frame = tau.frame();
    if (lambda <= 0.0)
        throw NumericError("scale parameter lambda must be positive");
    Subset covered = 0;
    for (Subset b : blocks) {
        if (b == 0) throw ValidationError("likelihood block is empty");
        if ((b & covered) != 0) throw ValidationError("likelihood blocks overlap");
        covered |= b;
    }
    if (covered != frame.full())
        throw ValidationError("likelihood blocks do not partition the frame");

    std::vector<double> powered(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i)
        powered[i] = std::pow(tau.values()[i], lambda);

    std::vector<PcbBlock> out;
    Subset dead = 0;
    double norm = 0.0;
    for (Subset b : blocks) {
        double best = 0.0;
        for (std::size_t i = 0; i < frame.size(); ++i)
            if (subset_contains(b, i)) best = std::max(best, powered[i]);
        if (best == 0.0) {
            dead |= b; // the block's foci vanish
            continue;
        }
        PcbBlock block;
        block.members = b;
        block.prob = best;
        for (std::size_t i = 0; i < frame.size(); ++i)
            if (subset_contains(b, i)) block.possibility[i] = powered[i] / best;
        norm += best;
        out.push_back(std::move(block));
    }
    for (auto& block : out) block.prob /= norm;
    if (dead != 0) {
        PcbBlock zero;
        zero.members = dead;
        for (std::size_t i = 0; i < frame.size(); ++i)
            if (subset_contains(dead, i)) zero.possibility[i] = 0.0;
        out.push_back(std::move(zero));
    }
    return recompose(PcbDecomposition(frame, std::move(out)));
}

MassFunction prior_to_probability(const Frame& frame, const std::vector<double>& rho,
                                  double lambda) {
    if (rho.size() != frame.size())
        throw ValidationError("prior vector length must match the frame");
    if (lambda <= 0.0)
        throw NumericError("scale parameter lambda must be positive");
    double norm = 0.0;
    std::vector<double> powered(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] < 0.0 || !std::isfinite(rho[i]))
            throw ValidationError("prior components must be finite and nonnegative");
        powered[i] = std::pow(rho[i], lambda);
        norm += powered[i];
    }
    if (norm <= 0.0)
        throw NumericError("degenerate prior: all components are zero");
    std::map<Subset, double> focal;
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (powered[i] > 0.0) focal[singleton(i)] = powered[i] / norm;
    return MassFunction::renormalized(frame, std::move(focal));
}

} // namespace pcbdec
