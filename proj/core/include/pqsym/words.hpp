#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace pqsym {

/* Words over the positive integers are the universal carrier: parking
 * functions, their nondecreasing representatives, permutations, and the
 * oracle's alphabet words are all plain Words. */
using Word = std::vector<std::int32_t>;
using Composition = std::vector<std::int32_t>;

// degree guard for enumerations and fiber scans; PQSYM_MAX_DEGREE overrides (default 7)
int max_degree();

bool is_parking(const Word& w);

// weakly increasing parking function
bool is_ndpf(const Word& w);

// all b in 1..n with #{a_i <= b} = b; requires a parking; always contains n
std::set<std::int32_t> breakpoints(const Word& a);

// true iff the only breakpoint is n; requires a parking, length >= 1
bool is_prime(const Word& a);

Word shift(const Word& w, std::int32_t k);

// u followed by v shifted up by |u|
Word shifted_concat(const Word& u, const Word& v);

// all interleavings of u with v shifted by |u|; multiplicities as repeats, lex order
std::vector<Word> shifted_shuffle(const Word& u, const Word& v);

// relabel letters by rank, ties broken left to right; result is a permutation
Word standardize(const Word& w);

struct ParkizationTrace {
    // one entry per non-parking round: the pivot of that round's input word,
    // and the word after decrementing every letter above the pivot
    std::vector<std::pair<std::int32_t, Word>> rounds;
    Word result;
};

ParkizationTrace parkize(const Word& w);

// parkize(w).result without the trace bookkeeping
Word park(const Word& w);

struct Evaluation {
    Word full;     // occurrence counts of letters 1..max(w)
    Word packed;   // full with zeros removed
    Word unpacked; // packed with i-1 zeros inserted after each entry i except the last
};

Evaluation evaluation(const Word& w);

// packed evaluation as a composition (multiplicities of the distinct letters in order)
Composition composition_of(const Word& w);

// enumerations in lexicographic order; guarded by max_degree()
std::vector<Word> enumerate_ndpf(int n);
std::vector<Word> enumerate_parking(int n);
std::vector<Word> enumerate_prime(int n);

// distinct rearrangements of a word, lex order (orbit of its nondecreasing form)
std::vector<Word> rearrangements(const Word& w);

} // namespace pqsym
