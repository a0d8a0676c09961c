#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcbdec/errors.hpp"

namespace pcbdec {

// Subsets of a frame are bitmasks over outcome indices 0..N-1.
using Subset = std::uint32_t;

constexpr std::size_t kMaxFrameSize = 32;
// Dense 2^N tabulation (needed by Mobius inversion) is capped here.
constexpr std::size_t kMaxDenseFrameSize = 16;

inline int subset_size(Subset s) { return std::popcount(s); }
inline bool subset_contains(Subset s, std::size_t i) { return (s >> i) & 1u; }
inline Subset singleton(std::size_t i) { return Subset{1} << i; }

// Finite ordered set of distinct outcome labels.
class Frame {
public:
    explicit Frame(std::vector<std::string> outcomes)
        : outcomes_(std::move(outcomes)) {
        if (outcomes_.empty())
            throw ValidationError("frame must have at least one outcome");
        if (outcomes_.size() > kMaxFrameSize)
            throw NumericError("frame exceeds maximum supported size of 32 outcomes");
        for (std::size_t i = 0; i < outcomes_.size(); ++i)
            for (std::size_t j = i + 1; j < outcomes_.size(); ++j)
                if (outcomes_[i] == outcomes_[j])
                    throw ValidationError("duplicate outcome label '" + outcomes_[i] + "'");
    }

    std::size_t size() const { return outcomes_.size(); }
    const std::string& label(std::size_t i) const { return outcomes_[i]; }
    const std::vector<std::string>& labels() const { return outcomes_; }

    std::optional<std::size_t> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < outcomes_.size(); ++i)
            if (outcomes_[i] == label) return i;
        return std::nullopt;
    }

    Subset full() const {
        return size() == kMaxFrameSize ? ~Subset{0}
                                       : (Subset{1} << size()) - 1;
    }

    bool operator==(const Frame&) const = default;

    std::string describe_subset(Subset s) const {
        std::string out = "{";
        bool first = true;
        for (std::size_t i = 0; i < size(); ++i) {
            if (!subset_contains(s, i)) continue;
            if (!first) out += ",";
            out += outcomes_[i];
            first = false;
        }
        return out + "}";
    }

private:
    std::vector<std::string> outcomes_;
};

} // namespace pcbdec
