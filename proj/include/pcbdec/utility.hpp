#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pcbdec/errors.hpp"

namespace pcbdec {

constexpr double kUtilityTolerance = 1e-9;

// Point on the binary utility scale: <lambda, rho> with max(lambda,rho)=1.
// The scale is a chain from <0,1> (worst) through <1,1> up to <1,0> (best).
class BinaryUtility {
public:
    BinaryUtility(double lambda, double rho);

    static BinaryUtility best() { return {1.0, 0.0}; }
    static BinaryUtility worst() { return {0.0, 1.0}; }

    double lambda() const { return lambda_; }
    double rho() const { return rho_; }

    // Position along the chain: lambda on [0,1], then 2-rho on [1,2].
    double chain_position() const {
        return rho_ >= 1.0 - kUtilityTolerance ? lambda_ : 2.0 - rho_;
    }

    bool operator==(const BinaryUtility& o) const {
        return lambda_ == o.lambda_ && rho_ == o.rho_;
    }

private:
    double lambda_;
    double rho_;
};

inline bool b_less(const BinaryUtility& a, const BinaryUtility& b) {
    return a.chain_position() < b.chain_position();
}

BinaryUtility b_max(const BinaryUtility& a, const BinaryUtility& b);

// Possibility-scaled point; leaves the scale B, so it is a plain pair.
struct ScaledBinary {
    double lambda = 0.0;
    double rho = 0.0;
};

inline ScaledBinary b_scale(double pi, const BinaryUtility& b) {
    return {pi * b.lambda(), pi * b.rho()};
}

// Strictly increasing bridge from B to [0,1], pinned at <0,1> -> 0 and
// <1,0> -> 1. Parametric form: two linear segments meeting at <1,1> -> c,
// where c encodes ambiguity attitude (< .5 averse, .5 neutral, > .5
// seeking). Tabular form: piecewise-linear through user points.
class TFunction {
public:
    static TFunction parametric(double c);
    static TFunction tabular(std::vector<std::pair<BinaryUtility, double>> points);

    double operator()(const BinaryUtility& b) const;

    bool is_parametric() const { return std::holds_alternative<double>(form_); }
    double parametric_c() const { return std::get<double>(form_); }
    const std::vector<std::pair<BinaryUtility, double>>& points() const {
        return std::get<std::vector<std::pair<BinaryUtility, double>>>(form_);
    }

private:
    TFunction() = default;
    std::variant<double, std::vector<std::pair<BinaryUtility, double>>> form_;
};

// Prize labels with their binary utilities; designated best (<1,0>) and
// worst (<0,1>) prizes must be present and distinct.
class PrizeAssignment {
public:
    PrizeAssignment(std::vector<std::string> prizes, std::map<std::string, BinaryUtility> qu,
                    std::string best, std::string worst);

    const std::vector<std::string>& prizes() const { return prizes_; }
    const std::string& best() const { return best_; }
    const std::string& worst() const { return worst_; }
    const BinaryUtility& qu(const std::string& prize) const;
    bool has(const std::string& prize) const { return qu_.count(prize) != 0; }

private:
    std::vector<std::string> prizes_;
    std::map<std::string, BinaryUtility> qu_;
    std::string best_;
    std::string worst_;
};

// Binary utility of a possibilistic lottery (max-normalized map
// prize -> possibility): componentwise max of pi_j * qu(w_j).
BinaryUtility qu_lottery(const std::map<std::string, double>& possibilities,
                         const PrizeAssignment& prizes);

// Plain linear expected utility of a probabilistic lottery.
double expected_utility(const std::map<std::string, double>& lottery,
                        const std::map<std::string, double>& u);

// Two-stage pcb lottery: probabilities over blocks, possibilistic branch
// per block. Positive-probability branches must be max-normalized.
struct TwoStageLottery {
    std::vector<double> block_probs;
    std::vector<std::map<std::string, double>> branches;

    void validate() const;
};

// The mixed rule: sum_i p_i * t(qu(L_i)). Zero-probability branches are
// skipped.
double mixed_utility(const TwoStageLottery& lottery, const PrizeAssignment& prizes,
                     const TFunction& t);

} // namespace pcbdec
