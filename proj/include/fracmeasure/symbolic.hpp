#ifndef FRACMEASURE_SYMBOLIC_HPP
#define FRACMEASURE_SYMBOLIC_HPP

#include <cstdint>
#include <vector>

#include "fracmeasure/types.hpp"

namespace fracmeasure {

/// Square 0/1 matrix defining a subshift of finite type: symbol i may be
/// followed by symbol j iff entry (i, j) is 1.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(IntMatrix entries);

  static TransitionMatrix full(int size);

  int size() const { return static_cast<int>(entries_.rows()); }
  bool allows(Symbol from, Symbol to) const { return entries_(from, to) != 0; }
  int operator()(Symbol from, Symbol to) const { return entries_(from, to); }
  const IntMatrix& entries() const { return entries_; }

  bool is_full() const;
  int count_ones() const;
  int out_degree(Symbol i) const;

  bool operator==(const TransitionMatrix& other) const { return entries_ == other.entries_; }

 private:
  IntMatrix entries_;
};

/// A k-block subshift: words over {0..alphabet_size-1} avoiding the given
/// forbidden words, all of length k.
struct KBlockSpec {
  int alphabet_size = 0;
  int block_length = 0;
  std::vector<Word> forbidden;
};

/// Result of rewriting a k-block subshift as a 2-block one. Symbol u of the
/// new alphabet stands for the (k-1)-word blocks[u].
struct KBlockRecoding {
  std::vector<Word> blocks;
  TransitionMatrix matrix;

  // Sliding-window translation of an original word of length >= k-1 into
  // the new alphabet; throws if a window is not a new symbol.
  Word encode(const Word& original) const;
  // Inverse of encode for admissible words over the new alphabet.
  Word decode(const Word& recoded) const;
  int block_length() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()) + 1; }
};

Word shift(const Word& w);

/// 2^{-n} where n is the common prefix length, or 0 for equal words.
double sequence_distance(const Word& a, const Word& b);

bool is_admissible(const Word& w, const TransitionMatrix& a);

/// All admissible words of length k in lexicographic order. Every row of
/// the matrix must be nonzero.
std::vector<Word> admissible_words(const TransitionMatrix& a, int k);

/// Number of admissible words of length k (sum of entries of A^{k-1}).
std::uint64_t count_admissible(const TransitionMatrix& a, int k);

/// Strongly connected components of the transition digraph, each sorted,
/// listed in order of their smallest vertex.
std::vector<std::vector<int>> strongly_connected_components(const std::vector<std::vector<int>>& adjacency);
std::vector<std::vector<int>> strongly_connected_components(const TransitionMatrix& a);

bool is_irreducible(const TransitionMatrix& a);
bool is_aperiodic(const TransitionMatrix& a);

/// Period (gcd of cycle lengths) of an irreducible matrix.
int period(const TransitionMatrix& a);

/// Symbols from which arbitrarily long admissible words start, i.e. the
/// symbols that begin some infinite admissible sequence.
std::vector<bool> live_symbols(const TransitionMatrix& a);

KBlockRecoding recode_k_block(const KBlockSpec& spec);

}  // namespace fracmeasure

#endif  // FRACMEASURE_SYMBOLIC_HPP
