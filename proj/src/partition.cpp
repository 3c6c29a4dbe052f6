#include "hwv/partition.hpp"

#include <algorithm>
#include <sstream>

namespace hwv {

namespace {
const Int kZero = 0;
}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative partition part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(long k, const Int& l) {
    if (k < 0 || l < 0) throw std::invalid_argument("rectangle needs k,l >= 0");
    if (l == 0) return Partition{};
    return Partition(std::vector<Int>(static_cast<std::size_t>(k), l));
}

const Int& Partition::part(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("parts are 1-based");
    return i <= parts_.size() ? parts_[i - 1] : kZero;
}

Int Partition::size() const {
    Int s = 0;
    for (const Int& p : parts_) s += p;
    return s;
}

Partition Partition::body() const {
    if (parts_.empty()) return {};
    return Partition(std::vector<Int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::addFirstRow(const Int& k) const {
    std::vector<Int> ps = parts_;
    if (ps.empty()) ps.push_back(0);
    ps[0] += k;
    if (ps[0] < 0 || (ps.size() > 1 && ps[0] < ps[1]))
        throw std::invalid_argument("addFirstRow result is not a partition");
    return Partition(ps);
}

Partition Partition::padToSize(const Int& M) const {
    return addFirstRow(M - size());
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    if (!parts_[0].fits_slong_p() || parts_[0].get_si() > (1L << 26))
        throw std::domain_error("transpose: first row too long to materialize");
    long cols = parts_[0].get_si();
    std::vector<Int> out(static_cast<std::size_t>(cols));
    for (long c = 1; c <= cols; ++c) {
        long len = 0;
        for (const Int& p : parts_)
            if (p >= c) ++len;
        out[static_cast<std::size_t>(c - 1)] = len;
    }
    return Partition(std::move(out));
}

std::map<long, Int> Partition::columnCounts() const {
    std::map<long, Int> counts;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        Int next = (i + 1 < parts_.size()) ? parts_[i + 1] : Int(0);
        Int c = parts_[i] - next;
        if (c != 0) counts[static_cast<long>(i + 1)] = c;
    }
    return counts;
}

Partition operator+(const Partition& a, const Partition& b) {
    std::vector<Int> ps(std::max(a.parts_.size(), b.parts_.size()), 0);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i < a.parts_.size()) ps[i] += a.parts_[i];
        if (i < b.parts_.size()) ps[i] += b.parts_[i];
    }
    return Partition(std::move(ps));
}

std::string Partition::toString() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace hwv
