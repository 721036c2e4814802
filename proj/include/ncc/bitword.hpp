#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ncc {

/// Fixed-length binary word. Symbols are stored oldest-first: index i of a
/// length-L word is the symbol at time -(L-1)+i, so the last index is the most
/// recent symbol ("time 0"). Internally the word is the integer you get by
/// reading it left to right, which makes lexicographic order numeric order and
/// a flip at time -t a single XOR at bit t.
class BitWord {
public:
    static constexpr int max_len = 48;

    constexpr BitWord() = default;
    constexpr BitWord(int len, std::uint64_t bits) : len_(len), bits_(bits & mask(len)) {}

    static BitWord parse(std::string_view s);

    constexpr int size() const { return len_; }
    constexpr bool empty() const { return len_ == 0; }
    constexpr std::uint64_t value() const { return bits_; }

    /// Symbol at oldest-first index i.
    constexpr int operator[](int i) const { return static_cast<int>((bits_ >> (len_ - 1 - i)) & 1u); }
    /// Symbol t steps back from the end (t = 0 is the most recent symbol).
    constexpr int back(int t = 0) const { return static_cast<int>((bits_ >> t) & 1u); }

    constexpr BitWord append(int b) const { return {len_ + 1, (bits_ << 1) | static_cast<std::uint64_t>(b & 1)}; }
    constexpr BitWord prepend(int b) const { return {len_ + 1, bits_ | (static_cast<std::uint64_t>(b & 1) << len_)}; }
    constexpr BitWord concat(const BitWord& tail) const { return {len_ + tail.len_, (bits_ << tail.len_) | tail.bits_}; }

    /// Oldest k symbols.
    constexpr BitWord prefix(int k) const { return {k, bits_ >> (len_ - k)}; }
    /// Most recent k symbols.
    constexpr BitWord suffix(int k) const { return {k, bits_ & mask(k)}; }
    constexpr BitWord drop_first() const { return {len_ - 1, bits_ & mask(len_ - 1)}; }
    constexpr BitWord drop_last() const { return {len_ - 1, bits_ >> 1}; }

    /// Word with the symbol t steps back from the end flipped.
    constexpr BitWord flip_back(int t) const { return {len_, bits_ ^ (std::uint64_t{1} << t)}; }

    /// True iff f occurs as a contiguous factor.
    bool contains(const BitWord& f) const;

    std::string str() const;

    friend constexpr auto operator<=>(const BitWord&, const BitWord&) = default;

private:
    static constexpr std::uint64_t mask(int k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

    int len_ = 0;
    std::uint64_t bits_ = 0;
};

}  // namespace ncc
