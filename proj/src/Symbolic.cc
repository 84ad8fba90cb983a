//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Symbolic.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Symbolic.hh"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "cantorflip/Errors.hh"

namespace cantorflip
{
namespace
{
__extension__ typedef unsigned __int128 Wide;

constexpr Wide max_index = std::numeric_limits<std::uint64_t>::max();

void check_alphabet(int alphabet)
{
    if (alphabet < 2)
    {
        throw ValidationError("alphabet size must be at least 2, got "
                              + std::to_string(alphabet));
    }
}

//! Index of the first word of length d: (M^d - M) / (M - 1).
Wide level_offset(int depth, int arity)
{
    Wide total = 0;
    Wide power = 1;
    for (int i = 1; i < depth; ++i)
    {
        power *= static_cast<Wide>(arity);
        total += power;
        if (total > max_index)
        {
            throw BudgetError("edge index overflows 64 bits at depth "
                              + std::to_string(depth));
        }
    }
    return total;
}
}  // namespace

//---------------------------------------------------------------------------//
Word::Word(int alphabet) : alphabet_{alphabet}
{
    check_alphabet(alphabet_);
}

Word::Word(int alphabet, std::vector<symbol_type> symbols)
    : alphabet_{alphabet}, symbols_{std::move(symbols)}
{
    check_alphabet(alphabet_);
    for (auto s : symbols_)
    {
        if (s < 1 || s > alphabet_)
        {
            throw ValidationError("symbol " + std::to_string(s)
                                  + " outside alphabet 1.."
                                  + std::to_string(alphabet_));
        }
    }
}

Word::Word(int alphabet, std::initializer_list<symbol_type> symbols)
    : Word(alphabet, std::vector<symbol_type>(symbols))
{
}

Word Word::extended(symbol_type s) const
{
    auto symbols = symbols_;
    symbols.push_back(s);
    return Word(alphabet_, std::move(symbols));
}

std::string Word::str() const
{
    std::string result;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
    {
        if (alphabet_ > 9 && i > 0)
        {
            result += ',';
        }
        result += std::to_string(symbols_[i]);
    }
    return result;
}

//---------------------------------------------------------------------------//
std::strong_ordering compare_star(PathWord const& a, PathWord const& b)
{
    if (a.alphabet() != b.alphabet())
    {
        throw ValidationError("compare_star: arity mismatch ("
                              + std::to_string(a.alphabet()) + " vs "
                              + std::to_string(b.alphabet()) + ")");
    }
    if (auto c = a.size() <=> b.size(); c != 0)
    {
        return c;
    }
    return std::lexicographical_compare_three_way(a.symbols().begin(),
                                                  a.symbols().end(),
                                                  b.symbols().begin(),
                                                  b.symbols().end());
}

//---------------------------------------------------------------------------//
/*!
 * Closed form: kappa(i_1..i_d) = (M^d - M)/(M - 1) + sum (i_k - 1) M^(d-k).
 *
 * The empty word has no index: the first nonempty word (1) maps to zero.
 */
EdgeIndex kappa(PathWord const& w)
{
    if (w.empty())
    {
        throw ValidationError("kappa is undefined for the empty word");
    }
    int const arity = w.alphabet();
    Wide rank = 0;
    for (auto s : w.symbols())
    {
        rank = rank * static_cast<Wide>(arity) + static_cast<Wide>(s - 1);
        if (rank > max_index)
        {
            throw BudgetError("edge index overflows 64 bits");
        }
    }
    Wide const total = level_offset(static_cast<int>(w.size()), arity) + rank;
    if (total > max_index)
    {
        throw BudgetError("edge index overflows 64 bits");
    }
    return EdgeIndex{static_cast<std::uint64_t>(total)};
}

//---------------------------------------------------------------------------//
PathWord kappa_inverse(EdgeIndex k, int arity)
{
    check_alphabet(arity);
    Wide const target = k.value;
    Wide const m = static_cast<Wide>(arity);

    // Find depth d with offset(d) <= k < offset(d) + M^d
    int depth = 1;
    Wide offset = 0;
    Wide width = m;
    while (target >= offset + width)
    {
        offset += width;
        width *= m;
        ++depth;
    }

    Wide rank = target - offset;
    std::vector<int> symbols(static_cast<std::size_t>(depth));
    for (int i = depth - 1; i >= 0; --i)
    {
        symbols[static_cast<std::size_t>(i)] = static_cast<int>(rank % m) + 1;
        rank /= m;
    }
    return PathWord(arity, std::move(symbols));
}

//---------------------------------------------------------------------------//
/*!
 * Children of edge k are M*k + M + c - 1 for c = 1..M.
 */
std::vector<EdgeIndex> child_indices(EdgeIndex k, int arity)
{
    check_alphabet(arity);
    Wide const m = static_cast<Wide>(arity);
    Wide const first = m * k.value + m;
    if (first + m - 1 > max_index)
    {
        throw BudgetError("child edge index overflows 64 bits");
    }
    std::vector<EdgeIndex> result;
    result.reserve(static_cast<std::size_t>(arity));
    for (Wide c = 0; c < m; ++c)
    {
        result.push_back(EdgeIndex{static_cast<std::uint64_t>(first + c)});
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
