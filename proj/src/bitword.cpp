#include "ncc/bitword.hpp"

#include <stdexcept>

namespace ncc {

BitWord BitWord::parse(std::string_view s) {
    if (s.size() > static_cast<std::size_t>(max_len))
        throw std::invalid_argument("word longer than " + std::to_string(max_len) + " bits: '" + std::string(s) + "'");
    std::uint64_t v = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("word must be over {0,1}: '" + std::string(s) + "'");
        v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    return {static_cast<int>(s.size()), v};
}

bool BitWord::contains(const BitWord& f) const {
    if (f.len_ > len_) return false;
    if (f.len_ == 0) return true;
    const std::uint64_t m = mask(f.len_);
    for (int shift = 0; shift + f.len_ <= len_; ++shift)
        if (((bits_ >> shift) & m) == f.bits_) return true;
    return false;
}

std::string BitWord::str() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
        if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

}  // namespace ncc
