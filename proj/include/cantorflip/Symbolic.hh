//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Symbolic.hh
//---------------------------------------------------------------------------//
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cantorflip
{
//---------------------------------------------------------------------------//
/*!
 * A finite word over the alphabet {1, ..., size}.
 *
 * Used both for tree paths (alphabet = arity M) and for edge labels
 * (alphabet = number of maps N). The empty word is representable; operations
 * that need a nonempty word check it themselves.
 */
class Word
{
  public:
    using symbol_type = int;

    // Construct an empty word over {1..alphabet}
    explicit Word(int alphabet);

    // Construct from symbols, validating the range
    Word(int alphabet, std::vector<symbol_type> symbols);
    Word(int alphabet, std::initializer_list<symbol_type> symbols);

    int alphabet() const { return alphabet_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    symbol_type operator[](std::size_t i) const { return symbols_[i]; }
    std::vector<symbol_type> const& symbols() const { return symbols_; }

    // Word extended by one symbol on the right
    Word extended(symbol_type s) const;

    // Digits concatenated, e.g. "121" (comma separated when alphabet > 9)
    std::string str() const;

    friend bool operator==(Word const&, Word const&) = default;

  private:
    int alphabet_;
    std::vector<symbol_type> symbols_;
};

//! Path through the M-ary tree; symbols in 1..M.
using PathWord = Word;
//! Edge-label sequence; symbols in 1..N.
using LabelWord = Word;

//---------------------------------------------------------------------------//
//! Position of an edge in the breadth-first, left-to-right edge order.
struct EdgeIndex
{
    std::uint64_t value{0};

    friend auto operator<=>(EdgeIndex, EdgeIndex) = default;
};

//---------------------------------------------------------------------------//
// Shortlex comparison: shorter words first, then lexicographic
std::strong_ordering compare_star(PathWord const& a, PathWord const& b);

// Number of nonempty words preceding w in shortlex order
EdgeIndex kappa(PathWord const& w);

// Inverse of kappa for the given arity
PathWord kappa_inverse(EdgeIndex k, int arity);

// Edge indices of the M children of edge k
std::vector<EdgeIndex> child_indices(EdgeIndex k, int arity);

//---------------------------------------------------------------------------//
}  // namespace cantorflip
