#include "fpcodes/descendant.hpp"

#include <algorithm>
#include <string>

#include "detail/enumeration.hpp"

namespace fpcodes {

SymbolProfile SymbolProfile::of(const std::vector<Codeword>& words) {
    if (words.empty()) throw ParameterError("symbol profile of an empty word set");
    const std::size_t len = words.front().size();
    SymbolProfile profile;
    profile.sets_.resize(len);
    for (const auto& w : words) {
        if (w.size() != len)
            throw DimensionError("profile: word length " + std::to_string(w.size()) +
                                 " does not match " + std::to_string(len));
    }
    for (std::size_t i = 0; i < len; ++i) {
        auto& set = profile.sets_[i];
        for (const auto& w : words) set.push_back(w[i]);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    return profile;
}

SymbolProfile SymbolProfile::of(const Code& code) {
    return of(code.words());
}

std::uint64_t SymbolProfile::product_size() const {
    std::uint64_t product = 1;
    for (const auto& set : sets_) product = detail::sat_mul(product, set.size());
    return product;
}

bool SymbolProfile::contains(const Codeword& w) const {
    if (w.size() != sets_.size())
        throw DimensionError("profile containment: length mismatch");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (!std::binary_search(sets_[i].begin(), sets_[i].end(), w[i])) return false;
    }
    return true;
}

bool SymbolProfile::intersects(const SymbolProfile& other) const {
    if (other.sets_.size() != sets_.size())
        throw DimensionError("profile intersection: length mismatch");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        const auto& a = sets_[i];
        const auto& b = other.sets_[i];
        std::size_t ia = 0, ib = 0;
        bool found = false;
        while (ia < a.size() && ib < b.size()) {
            if (a[ia] == b[ib]) { found = true; break; }
            (a[ia] < b[ib]) ? ++ia : ++ib;
        }
        if (!found) return false;
    }
    return true;
}

std::optional<Codeword> SymbolProfile::first_common_word(const SymbolProfile& other) const {
    if (other.sets_.size() != sets_.size())
        throw DimensionError("profile intersection: length mismatch");
    Codeword word(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        const auto& a = sets_[i];
        const auto& b = other.sets_[i];
        std::size_t ia = 0, ib = 0;
        bool found = false;
        while (ia < a.size() && ib < b.size()) {
            if (a[ia] == b[ib]) { word[i] = a[ia]; found = true; break; }
            (a[ia] < b[ib]) ? ++ia : ++ib;
        }
        if (!found) return std::nullopt;
    }
    return word;
}

bool is_descendant(const std::vector<Codeword>& parents, const Codeword& word) {
    if (parents.empty()) throw ParameterError("is_descendant: empty parent set");
    const std::size_t len = parents.front().size();
    if (word.size() != len) throw DimensionError("is_descendant: length mismatch");
    for (std::size_t i = 0; i < len; ++i) {
        bool matched = false;
        for (const auto& p : parents) {
            if (p.size() != len) throw DimensionError("is_descendant: ragged parent set");
            if (p[i] == word[i]) { matched = true; break; }
        }
        if (!matched) return false;
    }
    return true;
}

std::vector<Codeword> enumerate_descendants(const std::vector<Codeword>& parents,
                                            std::uint64_t ceiling) {
    ProductEnumerator walk(SymbolProfile::of(parents), ceiling);
    std::vector<Codeword> result;
    result.reserve(static_cast<std::size_t>(walk.count()));
    Codeword scratch;
    for (std::uint64_t k = 0; k < walk.count(); ++k) {
        walk.word_at(k, scratch);
        result.push_back(scratch);
    }
    return result;
}

bool profiles_intersect(const std::vector<Codeword>& first, const std::vector<Codeword>& second) {
    return SymbolProfile::of(first).intersects(SymbolProfile::of(second));
}

ProductEnumerator::ProductEnumerator(SymbolProfile profile, std::uint64_t ceiling)
    : profile_(std::move(profile)) {
    count_ = profile_.product_size();
    if (count_ > ceiling)
        throw CapacityError("descendant product size " +
                            (count_ == detail::kSaturated ? std::string("overflows")
                                                          : std::to_string(count_)) +
                            " exceeds ceiling " + std::to_string(ceiling));
    // strides_[i] = product of set sizes right of coordinate i
    strides_.assign(profile_.length(), 1);
    for (std::size_t i = profile_.length(); i-- > 1;)
        strides_[i - 1] = strides_[i] * profile_.coordinate(i).size();
}

Codeword ProductEnumerator::at(std::uint64_t k) const {
    Codeword word;
    word_at(k, word);
    return word;
}

void ProductEnumerator::word_at(std::uint64_t k, Codeword& out) const {
    out.resize(profile_.length());
    for (std::size_t i = 0; i < profile_.length(); ++i) {
        const auto& set = profile_.coordinate(i);
        out[i] = set[static_cast<std::size_t>((k / strides_[i]) % set.size())];
    }
}

ProductEnumerator descendant_candidates(const Code& c, std::uint64_t ceiling) {
    return ProductEnumerator(SymbolProfile::of(c), ceiling);
}

} // namespace fpcodes
