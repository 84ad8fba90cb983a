//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Deterministic.hh
//! \brief Binary tree with every m-th edge labeled 1, and the golden-mean
//!        type shifts that describe its codings.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "Symbolic.hh"

namespace cantorflip
{
//---------------------------------------------------------------------------//
/*!
 * Labeling of the binary tree: edge kappa carries 1 iff
 * kappa == offset (mod m), and 0 otherwise.
 *
 * The default offset m - 1 labels the m-th, 2m-th, ... edges, which is the
 * convention under which the mod-m graph walk describes the codings.
 */
struct DeterministicSpec
{
    int period{3};
    int offset{2};

    // Validated spec with the default offset m - 1
    static DeterministicSpec every_mth(int m);

    // Validate period >= 2 and 0 <= offset < period
    void validate() const;
};

//---------------------------------------------------------------------------//
/*!
 * Set of binary words of one length, stored as sorted bit codes.
 *
 * The first symbol is the most significant bit. Symbols are written 0/1 here;
 * the library-wide label alphabet maps 0 -> 1 and 1 -> 2 via to_label_word.
 */
struct WordSet
{
    int length{0};
    std::vector<std::uint64_t> codes;

    std::size_t size() const { return codes.size(); }
    bool contains(std::uint64_t code) const;

    // Words as "0"/"1" strings in increasing order
    std::vector<std::string> strings() const;

    // Whether every word of this set is in other
    bool subset_of(WordSet const& other) const;

    friend bool operator==(WordSet const&, WordSet const&) = default;
};

// Parse a "0"/"1" string into a bit code
std::uint64_t binary_code(std::string const& word);

// Map a 0/1 word to the label alphabet {1, 2}
LabelWord to_label_word(std::uint64_t code, int length);

//---------------------------------------------------------------------------//
//! Vertices 0..m-1 with edges j -> 2j+1, 2j+2 (mod m).
struct ModGraph
{
    int size{3};
    std::vector<std::array<int, 2>> successors;
};

//---------------------------------------------------------------------------//
//! Geometric growth estimates of a word-count sequence.
struct GrowthRate
{
    double last_ratio{1};  //!< counts[n] / counts[n-1] at the end
    double regression{1};  //!< exp of least-squares slope of ln count
};

//! Largest number of (word, state) pairs kept per level by the generators.
inline constexpr std::size_t word_state_budget = 50'000'000;

//---------------------------------------------------------------------------//
// Integer L with 2^(L+1) - 1 <= m <= 2^(L+2) - 2, for m >= 3
int level_of(int m);

// Root in (1,2) of 1 + x^L = x^(L+1)
double rho(int level);

// Hausdorff dimension of the deterministic subset for ratio r
double dim_Fm(int m, double ratio);

// The mod-m digraph
ModGraph mod_graph(int m);

// Distinct label words of length n over all 2^n tree paths
WordSet tree_words(DeterministicSpec const& spec, int n);

// Words emitted by length-n walks of the mod-m graph starting at 1 or 2
WordSet graph_words(int m, int n);

// Length-n words starting with 0^min(L,n) and avoiding 1 0^k 1 for k < L
WordSet sft_words(int level, int n);

// Growth of |W_n| from at least five consecutive counts
GrowthRate growth_rate(std::vector<std::uint64_t> const& counts);

//---------------------------------------------------------------------------//
}  // namespace cantorflip
