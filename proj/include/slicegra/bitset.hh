#ifndef SLICEGRA_BITSET_HH
#define SLICEGRA_BITSET_HH

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace slicegra
{
    /// Fixed-size dynamic bitset used for adjacency rows and search domains.
    class Bitset
    {
    public:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        Bitset() = default;

        explicit Bitset(std::size_t size, bool filled = false) :
            _words((size + 63) / 64, filled ? ~std::uint64_t{0} : 0),
            _size(size)
        {
            if (filled)
                trim();
        }

        auto size() const -> std::size_t { return _size; }

        auto set(std::size_t i) -> void { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
        auto reset(std::size_t i) -> void { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1; }

        auto count() const -> std::size_t
        {
            std::size_t result = 0;
            for (auto w : _words)
                result += static_cast<std::size_t>(std::popcount(w));
            return result;
        }

        auto none() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        auto any() const -> bool { return ! none(); }

        /// First set bit at or after `from`, or npos.
        auto find_next(std::size_t from) const -> std::size_t
        {
            if (from >= _size)
                return npos;
            std::size_t word = from / 64;
            std::uint64_t w = _words[word] & (~std::uint64_t{0} << (from % 64));
            while (true) {
                if (w)
                    return word * 64 + static_cast<std::size_t>(std::countr_zero(w));
                if (++word == _words.size())
                    return npos;
                w = _words[word];
            }
        }

        auto find_first() const -> std::size_t { return find_next(0); }

        auto operator&=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto operator|=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        auto operator==(const Bitset &) const -> bool = default;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t i = find_first(); i != npos; i = find_next(i + 1))
                f(i);
        }

    private:
        auto trim() -> void
        {
            if (_size % 64 && ! _words.empty())
                _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
        }

        std::vector<std::uint64_t> _words;
        std::size_t _size = 0;
    };
}

#endif
