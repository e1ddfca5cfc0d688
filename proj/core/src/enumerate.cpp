#include <stdexcept>

#include "bits.hpp"
#include "cauchon/diagram.hpp"

namespace cauchon {

using detail::low_bits;
using detail::reverse_bits;

// Row patterns are handled in reversed-bit encoding (column 1 in the most
// significant of the n bits), so that numeric order on words is the
// lexicographic order on row strings.

DiagramEnumerator::DiagramEnumerator(int m, int n)
    : m_(m), n_(n), full_(Grid(m, n).full_row()), fixed_first_(false) {
    levels_.resize(static_cast<std::size_t>(m));
    reset_level(0, full_);
    for (std::size_t l = 1; l < levels_.size(); ++l)
        reset_level(l, levels_[l - 1].open & pattern(l - 1));
}

DiagramEnumerator::DiagramEnumerator(int m, int n, RowWord first_row)
    : DiagramEnumerator(m, n) {
    if (first_row & ~full_)
        throw std::invalid_argument("first row has bits beyond column n");
    fixed_first_ = true;
    const int prefix = std::countr_one(first_row);
    Level& top = levels_[0];
    top.prefix = prefix;
    top.region = prefix < n_ ? full_ & low_bits(n_ - prefix - 1) : 0;
    top.tail = reverse_bits(first_row, n_) & top.region;
    for (std::size_t l = 1; l < levels_.size(); ++l)
        reset_level(l, levels_[l - 1].open & pattern(l - 1));
}

void DiagramEnumerator::reset_level(std::size_t level, RowWord open) {
    Level& lv = levels_[level];
    lv.open = open;
    lv.prefix = 0;
    lv.tail = 0;
    lv.region = n_ > 1 ? open & low_bits(n_ - 1) : 0;
}

bool DiagramEnumerator::advance_level(std::size_t level) {
    Level& lv = levels_[level];
    if (lv.tail != lv.region) {
        lv.tail = ((lv.tail | ~lv.region) + 1) & lv.region;
        return true;
    }
    if (lv.prefix == n_)
        return false;
    ++lv.prefix;
    lv.tail = 0;
    lv.region = lv.prefix < n_ ? lv.open & low_bits(n_ - lv.prefix - 1) : 0;
    return true;
}

RowWord DiagramEnumerator::pattern(std::size_t level) const {
    const Level& lv = levels_[level];
    return (full_ & ~low_bits(n_ - lv.prefix)) | lv.tail;
}

CauchonDiagram DiagramEnumerator::emit() const {
    std::vector<RowWord> rows(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l)
        rows[l] = reverse_bits(pattern(l), n_);
    return CauchonDiagram(Grid(m_, n_, std::move(rows)));
}

std::optional<CauchonDiagram> DiagramEnumerator::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return emit();
    }
    const std::size_t stop = fixed_first_ ? 1 : 0;
    for (std::size_t l = levels_.size(); l-- > stop;) {
        if (!advance_level(l))
            continue;
        for (std::size_t k = l + 1; k < levels_.size(); ++k)
            reset_level(k, levels_[k - 1].open & pattern(k - 1));
        return emit();
    }
    done_ = true;
    return std::nullopt;
}

std::uint64_t partition_count(int n) {
    if (n < 1 || n > 32)
        throw std::invalid_argument("partitioned enumeration supports 1 <= n <= 32");
    return std::uint64_t{1} << n;
}

RowWord partition_first_row(int n, std::uint64_t index) {
    if (index >= partition_count(n))
        throw std::out_of_range("partition index out of range");
    return reverse_bits(index, n);
}

} // namespace cauchon
