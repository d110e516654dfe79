#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisynth
{
    // Subsets of a small ground set are bitmasks; node i is bit i.
    using Mask = std::uint64_t;
    using Value = std::int64_t;

    // Saturating sentinels for unbounded quantities.
    inline constexpr Value neg_inf = std::numeric_limits<Value>::min() / 4;
    inline constexpr Value pos_inf = std::numeric_limits<Value>::max() / 4;

    inline auto is_finite(Value v) -> bool { return v > neg_inf && v < pos_inf; }

    auto sat_add(Value a, Value b) -> Value;

    inline auto bit(int i) -> Mask { return Mask{1} << i; }
    inline auto popcount(Mask m) -> int { return std::popcount(m); }
    inline auto full_mask(int n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    auto mask_to_indices(Mask m) -> std::vector<int>;
    auto indices_to_mask(const std::vector<int> & indices, int n) -> Mask;

    // Sum of a per-node vector over the nodes of a mask.
    template <typename T_>
    auto sum_over(const std::vector<T_> & v, Mask m) -> Value
    {
        Value r = 0;
        for (; m; m &= m - 1)
            r += v[std::countr_zero(m)];
        return r;
    }

    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Malformed input: out-of-range nodes, bad JSON, missing keys.
    class InputError : public Error
    {
    public:
        using Error::Error;
    };

    // Instance exceeds an enumeration cap.
    class CapacityError : public Error
    {
    public:
        using Error::Error;
    };

    // A required hypothesis does not hold for the given input.
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    // Internal inconsistency: a construction failed its own verification,
    // or a search ran out of budget where a solution is known to exist.
    class DefectError : public Error
    {
    public:
        using Error::Error;
    };
}
