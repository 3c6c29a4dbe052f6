#ifndef HWV_PARTITION_HPP
#define HWV_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hwv/basics.hpp"

namespace hwv {

// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
// Parts are arbitrary precision: first rows produced by the splitting
// procedure grow like n*d and can leave the 64-bit range.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);
    static Partition rectangle(long k, const Int& l);

    const std::vector<Int>& parts() const { return parts_; }
    const Int& part(std::size_t i) const;  // 1-based, 0 beyond length
    std::size_t length() const { return parts_.size(); }
    Int size() const;
    bool empty() const { return parts_.empty(); }

    Partition body() const;
    Partition addFirstRow(const Int& k) const;
    Partition padToSize(const Int& M) const;
    Partition transpose() const;  // requires a first row of machine-word size
    std::map<long, Int> columnCounts() const;

    friend Partition operator+(const Partition& a, const Partition& b);
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string toString() const;

private:
    std::vector<Int> parts_;
};

}  // namespace hwv

#endif
