#include "pcbdec/mass.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

#include "pcbdec/pcb.hpp"

namespace pcbdec {

namespace {

void require_dense_capable(const Frame& frame) {
    if (frame.size() > kMaxDenseFrameSize)
        throw NumericError("frame with " + std::to_string(frame.size()) +
                           " outcomes is too large for dense tabulation (max 16)");
}

// In-place subset-sum zeta transform: out[A] = sum_{B subseteq A} in[B].
void zeta_subsets(std::vector<double>& v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (Subset a = 0; a < v.size(); ++a)
            if (subset_contains(a, i)) v[a] += v[a ^ singleton(i)];
}

// Inverse of zeta_subsets (Mobius on subsets).
void mobius_subsets(std::vector<double>& v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (Subset a = 0; a < v.size(); ++a)
            if (subset_contains(a, i)) v[a] -= v[a ^ singleton(i)];
}

// out[A] = sum_{A subseteq B} in[B].
void zeta_supersets(std::vector<double>& v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (Subset a = 0; a < v.size(); ++a)
            if (!subset_contains(a, i)) v[a] += v[a | singleton(i)];
}

void mobius_supersets(std::vector<double>& v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (Subset a = 0; a < v.size(); ++a)
            if (!subset_contains(a, i)) v[a] -= v[a | singleton(i)];
}

MassFunction mass_from_focal_values(const Frame& frame, const std::vector<double>& masses,
                                    const char* source_name) {
    std::map<Subset, double> focal;
    double total = 0.0;
    for (Subset a = 1; a < masses.size(); ++a) {
        double m = masses[a];
        if (m < -kMassTolerance)
            throw ValidationError(std::string("inversion of ") + source_name +
                                  " yields negative mass " + std::to_string(m) + " on " +
                                  frame.describe_subset(a));
        if (m > kMassTolerance) {
            focal[a] = m;
            total += m;
        }
    }
    (void)total;
    return MassFunction(frame, std::move(focal));
}

} // namespace

MassFunction::MassFunction(Frame frame, std::map<Subset, double> focal)
    : frame_(std::move(frame)), focal_(std::move(focal)) {
    const Subset full = frame_.full();
    double total = 0.0;
    for (auto it = focal_.begin(); it != focal_.end();) {
        if (it->first == 0)
            throw ValidationError("empty set cannot carry mass");
        if ((it->first & ~full) != 0)
            throw ValidationError("focus contains outcomes outside the frame");
        if (it->second < 0.0)
            throw ValidationError("negative mass on " + frame_.describe_subset(it->first));
        if (it->second == 0.0) {
            it = focal_.erase(it);
            continue;
        }
        total += it->second;
        ++it;
    }
    if (std::abs(total - 1.0) > kMassTolerance)
        throw ValidationError("masses sum to " + std::to_string(total) +
                              ", expected 1 (use renormalized() for explicit repair)");
}

MassFunction MassFunction::vacuous(const Frame& frame) {
    return MassFunction(frame, {{frame.full(), 1.0}});
}

MassFunction MassFunction::categorical(const Frame& frame, Subset b) {
    if (b == 0) throw ValidationError("categorical evidence cannot be the empty set");
    return MassFunction(frame, {{b, 1.0}});
}

MassFunction MassFunction::renormalized(Frame frame, std::map<Subset, double> focal) {
    double total = 0.0;
    for (const auto& [a, m] : focal) {
        (void)a;
        total += m;
    }
    if (total <= kMassTolerance)
        throw NumericError("cannot renormalize: total mass is not positive");
    for (auto& [a, m] : focal) {
        (void)a;
        m /= total;
    }
    return MassFunction(std::move(frame), std::move(focal));
}

double MassFunction::belief(Subset a) const {
    double s = 0.0;
    for (const auto& [b, m] : focal_)
        if ((b & ~a) == 0) s += m;
    return s;
}

double MassFunction::plausibility(Subset a) const {
    double s = 0.0;
    for (const auto& [b, m] : focal_)
        if ((b & a) != 0) s += m;
    return s;
}

double MassFunction::commonality(Subset a) const {
    double s = 0.0;
    for (const auto& [b, m] : focal_)
        if ((a & ~b) == 0) s += m;
    return s;
}

bool MassFunction::is_probability() const {
    for (const auto& [b, m] : focal_) {
        (void)m;
        if (subset_size(b) != 1) return false;
    }
    return true;
}

SetFunction SetFunction::tabulate(const MassFunction& m, SetFunctionKind kind) {
    require_dense_capable(m.frame());
    const std::size_t n = m.frame().size();
    SetFunction sf(m.frame(), kind);
    std::vector<double> v(std::size_t{1} << n, 0.0);
    for (const auto& [a, mass] : m.focal()) v[a] = mass;
    switch (kind) {
    case SetFunctionKind::belief:
        zeta_subsets(v, n);
        break;
    case SetFunctionKind::commonality:
        zeta_supersets(v, n);
        break;
    case SetFunctionKind::plausibility: {
        // Pl(A) = 1 - Bel(~A)
        zeta_subsets(v, n);
        std::vector<double> pl(v.size());
        const Subset full = m.frame().full();
        for (Subset a = 0; a < v.size(); ++a) pl[a] = 1.0 - v[full & ~a];
        v = std::move(pl);
        break;
    }
    case SetFunctionKind::capacity:
        throw ValidationError("capacities are not derived from a bpa; use SetFunction::capacity");
    }
    sf.dense_ = std::move(v);
    return sf;
}

SetFunction SetFunction::lazy(MassFunction m, SetFunctionKind kind) {
    if (kind == SetFunctionKind::capacity)
        throw ValidationError("capacities are not derived from a bpa; use SetFunction::capacity");
    SetFunction sf(m.frame(), kind);
    sf.source_ = std::move(m);
    return sf;
}

SetFunction SetFunction::capacity(Frame frame, std::vector<double> values) {
    require_dense_capable(frame);
    const std::size_t n = frame.size();
    if (values.size() != (std::size_t{1} << n))
        throw ValidationError("capacity table must have 2^N entries");
    if (std::abs(values[0]) > kMassTolerance)
        throw StructureError("capacity must assign 0 to the empty set");
    if (std::abs(values[frame.full()] - 1.0) > kMassTolerance)
        throw StructureError("capacity must assign 1 to the full frame");
    for (Subset a = 0; a < values.size(); ++a)
        for (std::size_t i = 0; i < n; ++i)
            if (!subset_contains(a, i) &&
                values[a] > values[a | singleton(i)] + kMassTolerance)
                throw StructureError("capacity is not monotone at " +
                                     frame.describe_subset(a));
    SetFunction sf(std::move(frame), SetFunctionKind::capacity);
    sf.dense_ = std::move(values);
    return sf;
}

SetFunction SetFunction::from_table(Frame frame, SetFunctionKind kind,
                                    std::vector<double> values) {
    if (kind == SetFunctionKind::capacity)
        return capacity(std::move(frame), std::move(values));
    require_dense_capable(frame);
    if (values.size() != (std::size_t{1} << frame.size()))
        throw ValidationError("set-function table must have 2^N entries");
    const Subset full = frame.full();
    if (kind == SetFunctionKind::commonality) {
        if (std::abs(values[0] - 1.0) > kMassTolerance)
            throw ValidationError("commonality must assign 1 to the empty set");
    } else {
        if (std::abs(values[0]) > kMassTolerance ||
            std::abs(values[full] - 1.0) > kMassTolerance)
            throw ValidationError("belief/plausibility must map empty set to 0 and the full "
                                  "frame to 1");
    }
    SetFunction sf(std::move(frame), kind);
    sf.dense_ = std::move(values);
    return sf;
}

double SetFunction::value(Subset a) const {
    if (!dense_.empty()) return dense_[a];
    switch (kind_) {
    case SetFunctionKind::belief: return source_->belief(a);
    case SetFunctionKind::plausibility: return source_->plausibility(a);
    case SetFunctionKind::commonality: return source_->commonality(a);
    default: throw Error(ErrorCode::internal, "capacity without dense table");
    }
}

SetFunction to_belief(const MassFunction& m) {
    if (m.frame().size() > kMaxDenseFrameSize)
        return SetFunction::lazy(m, SetFunctionKind::belief);
    return SetFunction::tabulate(m, SetFunctionKind::belief);
}

SetFunction to_plausibility(const MassFunction& m) {
    if (m.frame().size() > kMaxDenseFrameSize)
        return SetFunction::lazy(m, SetFunctionKind::plausibility);
    return SetFunction::tabulate(m, SetFunctionKind::plausibility);
}

SetFunction to_commonality(const MassFunction& m) {
    if (m.frame().size() > kMaxDenseFrameSize)
        return SetFunction::lazy(m, SetFunctionKind::commonality);
    return SetFunction::tabulate(m, SetFunctionKind::commonality);
}

MassFunction from_belief(const SetFunction& bel) {
    if (!bel.is_dense())
        throw NumericError("Mobius inversion requires a dense set function (N <= 16)");
    if (bel.kind() != SetFunctionKind::belief)
        throw ValidationError("from_belief expects a belief-kind set function");
    std::vector<double> v = bel.dense_values();
    mobius_subsets(v, bel.frame().size());
    return mass_from_focal_values(bel.frame(), v, "belief function");
}

MassFunction from_commonality(const SetFunction& q) {
    if (!q.is_dense())
        throw NumericError("Mobius inversion requires a dense set function (N <= 16)");
    if (q.kind() != SetFunctionKind::commonality)
        throw ValidationError("from_commonality expects a commonality-kind set function");
    std::vector<double> v = q.dense_values();
    mobius_supersets(v, q.frame().size());
    return mass_from_focal_values(q.frame(), v, "commonality function");
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame())
        throw ValidationError("combination requires a shared frame");
    std::map<Subset, double> prod;
    double conflict = 0.0;
    for (const auto& [b1, v1] : m1.focal())
        for (const auto& [b2, v2] : m2.focal()) {
            const Subset inter = b1 & b2;
            if (inter == 0)
                conflict += v1 * v2;
            else
                prod[inter] += v1 * v2;
        }
    const double k = 1.0 - conflict;
    if (k <= kConflictTolerance)
        throw ConflictError("total conflict: evidence is fully contradictory");
    for (auto& [a, v] : prod) {
        (void)a;
        v /= k;
    }
    return MassFunction::renormalized(m1.frame(), std::move(prod));
}

MassFunction condition(const MassFunction& m, Subset b) {
    if (m.plausibility(b) <= kConflictTolerance)
        throw ConflictError("conditioning on an impossible event " +
                            m.frame().describe_subset(b));
    return dempster_combine(m, MassFunction::categorical(m.frame(), b));
}

SetFunction walley_combine(const SetFunction& q1, const SetFunction& q2) {
    if (q1.frame() != q2.frame())
        throw ValidationError("combination requires a shared frame");
    if (q1.kind() != SetFunctionKind::commonality || q2.kind() != SetFunctionKind::commonality)
        throw ValidationError("walley_combine expects commonality functions");
    const Frame& frame = q1.frame();
    require_dense_capable(frame);
    const std::size_t n = frame.size();
    for (const SetFunction* q : {&q1, &q2}) {
        std::vector<double> vals(std::size_t{1} << n);
        for (Subset a = 0; a < vals.size(); ++a) vals[a] = q->value(a);
        mobius_supersets(vals, n);
        MassFunction m = mass_from_focal_values(frame, vals, "commonality function");
        if (!std::holds_alternative<PcbDecomposition>(detect_pcb(m)))
            throw StructureError("walley_combine operand is not a pcb commonality");
    }

    std::vector<double> raw(std::size_t{1} << n, 0.0);
    raw[0] = 1.0;
    for (Subset a = 1; a < raw.size(); ++a) {
        if (q1.value(a) * q2.value(a) == 0.0) continue;
        double lo = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            if (subset_contains(a, i))
                lo = std::min(lo, q1.value(singleton(i)) * q2.value(singleton(i)));
        raw[a] = lo;
    }

    // Recover the (unnormalized) bpa; masses on nonempty sets are
    // independent of raw[0].
    std::vector<double> masses = raw;
    mobius_supersets(masses, n);
    std::map<Subset, double> focal;
    double total = 0.0;
    for (Subset a = 1; a < masses.size(); ++a) {
        if (masses[a] < -kMassTolerance)
            throw StructureError("min-combination did not yield a commonality function");
        if (masses[a] > kMassTolerance) {
            focal[a] = masses[a];
            total += masses[a];
        }
    }
    if (total <= kConflictTolerance)
        throw ConflictError("total conflict: combined commonality vanishes everywhere");
    MassFunction combined = MassFunction::renormalized(frame, std::move(focal));
    return to_commonality(combined);
}

} // namespace pcbdec
