#include "fpcodes/code.hpp"

#include <algorithm>
#include <string>

namespace fpcodes {

Alphabet::Alphabet(std::size_t size) : size_(size) {
    if (size < 2)
        throw ParameterError("alphabet size must be at least 2, got " + std::to_string(size));
    if (size > kMaxAlphabetSize)
        throw CapacityError("alphabet size " + std::to_string(size) + " exceeds ceiling " +
                            std::to_string(kMaxAlphabetSize));
}

std::size_t hamming_distance(const Codeword& x, const Codeword& y) {
    if (x.size() != y.size())
        throw DimensionError("hamming_distance: length mismatch (" + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()) + ")");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
    return d;
}

Code::Code(Alphabet alphabet, std::size_t length, std::vector<Codeword> words)
    : alphabet_(alphabet), length_(length), words_(std::move(words)) {
    if (length_ == 0) throw ParameterError("code length must be positive");
    for (const auto& w : words_) {
        if (w.size() != length_)
            throw DimensionError("codeword length " + std::to_string(w.size()) +
                                 " does not match code length " + std::to_string(length_));
        for (Symbol s : w) {
            if (!alphabet_.contains(s))
                throw DimensionError("symbol " + std::to_string(s) + " outside alphabet of size " +
                                     std::to_string(alphabet_.size()));
        }
    }
    std::sort(words_.begin(), words_.end());
    const auto dup = std::adjacent_find(words_.begin(), words_.end());
    if (dup != words_.end()) throw ParameterError("duplicate codeword in code");
}

bool Code::contains(const Codeword& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<std::size_t> Code::index_of(const Codeword& w) const {
    const auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - words_.begin());
}

MinDistance min_distance_to_code(const Code& c, const Codeword& y) {
    if (c.empty()) throw ParameterError("min_distance_to_code: empty code");
    MinDistance result;
    result.distance = c.length() + 1;
    for (const auto& w : c.words()) {
        const std::size_t d = hamming_distance(w, y);
        if (d < result.distance) {
            result.distance = d;
            result.minimizers.clear();
        }
        if (d == result.distance) result.minimizers.push_back(w);
    }
    return result;
}

TwoLevelCode::TwoLevelCode(Code base, std::vector<unsigned> assignments)
    : base_(std::move(base)), assignments_(std::move(assignments)) {
    if (base_.empty()) throw ParameterError("two-level code needs a non-empty base");
    if (assignments_.size() != base_.size())
        throw DimensionError("group assignments (" + std::to_string(assignments_.size()) +
                             ") do not align with base code size " + std::to_string(base_.size()));

    unsigned g = 0;
    for (unsigned a : assignments_) {
        if (a == 0) throw ParameterError("group indices are 1-based; got 0");
        g = std::max(g, a);
    }
    std::vector<std::size_t> counts(g, 0);
    for (unsigned a : assignments_) ++counts[a - 1];

    const std::size_t p = counts[0];
    for (unsigned i = 0; i < g; ++i) {
        if (counts[i] != p)
            throw ParameterError("groups must have equal size: group " + std::to_string(i + 1) +
                                 " has " + std::to_string(counts[i]) + " words, group 1 has " +
                                 std::to_string(p));
    }
    group_count_ = g;
    group_size_ = p;
}

TwoLevelCode TwoLevelCode::from_groups(Alphabet alphabet, std::size_t length,
                                       const std::vector<std::vector<Codeword>>& groups) {
    std::vector<Codeword> all;
    for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
    Code base(alphabet, length, std::move(all));

    std::vector<unsigned> assignments(base.size(), 0);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (const auto& w : groups[gi]) {
            const auto idx = base.index_of(w);
            assignments[*idx] = static_cast<unsigned>(gi + 1);
        }
    }
    return TwoLevelCode(std::move(base), std::move(assignments));
}

unsigned TwoLevelCode::group_of(const Codeword& w) const {
    const auto idx = base_.index_of(w);
    if (!idx) throw ParameterError("word is not in the base code");
    return assignments_[*idx];
}

std::vector<Codeword> TwoLevelCode::group_members(unsigned group) const {
    std::vector<Codeword> members;
    for (std::size_t i = 0; i < base_.size(); ++i)
        if (assignments_[i] == group) members.push_back(base_.word(i));
    return members;
}

std::vector<unsigned> TwoLevelCode::group_set(const std::vector<Codeword>& words) const {
    std::vector<unsigned> groups;
    groups.reserve(words.size());
    for (const auto& w : words) groups.push_back(group_of(w));
    std::sort(groups.begin(), groups.end());
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    return groups;
}

} // namespace fpcodes
