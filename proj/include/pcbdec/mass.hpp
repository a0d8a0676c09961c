#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pcbdec/frame.hpp"

namespace pcbdec {

constexpr double kMassTolerance = 1e-9;
constexpr double kConflictTolerance = 1e-12;

// Basic probability assignment: sparse map from focal subsets to masses.
// Construction canonicalizes (merges duplicates, drops exact zeros) and
// validates: no empty focus, every stored mass > 0, sum 1 within 1e-9.
class MassFunction {
public:
    MassFunction(Frame frame, std::map<Subset, double> focal);

    static MassFunction vacuous(const Frame& frame);
    static MassFunction categorical(const Frame& frame, Subset b);
    // Explicit repair: scales masses to sum 1. Rejects nonpositive totals.
    static MassFunction renormalized(Frame frame, std::map<Subset, double> focal);

    const Frame& frame() const { return frame_; }
    const std::map<Subset, double>& focal() const { return focal_; }

    double mass(Subset a) const {
        auto it = focal_.find(a);
        return it == focal_.end() ? 0.0 : it->second;
    }

    // Point evaluations, O(#foci) each.
    double belief(Subset a) const;
    double plausibility(Subset a) const;
    double commonality(Subset a) const;

    bool is_probability() const; // all foci singletons

    bool operator==(const MassFunction&) const = default;

private:
    Frame frame_;
    std::map<Subset, double> focal_;
};

enum class SetFunctionKind { belief, plausibility, commonality, capacity };

// One of the derived set functions of a bpa, or a free-standing capacity.
// Dense 2^N tabulation for N <= 16; beyond that values are computed on
// demand from the backing MassFunction.
class SetFunction {
public:
    static SetFunction tabulate(const MassFunction& m, SetFunctionKind kind);
    static SetFunction lazy(MassFunction m, SetFunctionKind kind);
    // Capacity from explicit values (index = subset mask); checks
    // normalization and monotonicity.
    static SetFunction capacity(Frame frame, std::vector<double> values);
    // Tabulated belief/plausibility/commonality from raw values; only
    // boundary conditions are checked here, Mobius inversion rejects
    // tables that are not genuine belief functions.
    static SetFunction from_table(Frame frame, SetFunctionKind kind,
                                  std::vector<double> values);

    const Frame& frame() const { return frame_; }
    SetFunctionKind kind() const { return kind_; }
    bool is_dense() const { return !dense_.empty(); }
    const std::vector<double>& dense_values() const { return dense_; }

    double value(Subset a) const;

private:
    SetFunction(Frame frame, SetFunctionKind kind) : frame_(std::move(frame)), kind_(kind) {}

    Frame frame_;
    SetFunctionKind kind_;
    std::vector<double> dense_;
    std::optional<MassFunction> source_;
};

SetFunction to_belief(const MassFunction& m);
SetFunction to_plausibility(const MassFunction& m);
SetFunction to_commonality(const MassFunction& m);

// Mobius inversions; require dense inputs (N <= 16).
MassFunction from_belief(const SetFunction& bel);
MassFunction from_commonality(const SetFunction& q);

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2);
MassFunction condition(const MassFunction& m, Subset b);

// Walley's pointwise-min rule on pcb commonalities. The normalization
// constant is fixed by recovering the bpa and scaling masses to sum 1.
SetFunction walley_combine(const SetFunction& q1, const SetFunction& q2);

} // namespace pcbdec
