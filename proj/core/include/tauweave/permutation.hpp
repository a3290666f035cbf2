#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tauweave::weak_order {

// Element of Sym_{n+1} in one-line notation: images()[a-1] = w(a).
// The left action of a generator is (s_i . w)(a) = s_i(w(a)), i.e. s_i swaps
// the *values* i and i+1.
class Permutation {
public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int order);
  static Permutation adjacent_transposition(int order, int i);
  static Permutation longest_element(int order); // (n+1, n, ..., 1)

  int order() const { return static_cast<int>(images_.size()); }
  int operator()(int a) const { return images_[a - 1]; }
  const std::vector<int> &images() const { return images_; }

  Permutation inverse() const;
  // Function composition: (this o other)(a) = this(other(a)).
  Permutation compose(const Permutation &other) const;

  bool is_identity() const;

  auto operator<=>(const Permutation &) const = default;

  std::string to_string() const;

private:
  std::vector<int> images_;
};

// #{(a,b) : a < b, w(a) > w(b)}; equals the Coxeter length of w.
long inversions(const Permutation &w);

// (s_i . w, +1) when the length goes up, (s_i . w, -1) when it goes down.
std::pair<Permutation, int> left_multiply(int i, const Permutation &w);

// Words are written leftmost-letter-applied-last, matching s_{i_l} ... s_{i_1}.
struct ReducedWord {
  int order = 0;
  std::vector<int> letters;
};

Permutation word_product(int order, const std::vector<int> &letters);

bool is_reduced(int order, const std::vector<int> &letters);

// Deletes the two letters located by the exchange condition scan; the product
// is unchanged. Throws if the word is already reduced. Returns the shortened
// word together with the deleted positions (indices into the input vector).
struct ExchangeDrop {
  std::vector<int> word;
  std::size_t removed_left;  // position of the s_{i_k} letter
  std::size_t removed_right; // position of the s_{i_j} letter
};
ExchangeDrop exchange_drop(int order, const std::vector<int> &letters);

// Canonical reduced word: repeatedly take the smallest i with
// l(s_i w) = l(w) - 1 and append it, so the vector reads s_{i_l} ... s_{i_1}.
std::vector<int> reduced_word(const Permutation &w);

// Left weak order via the closed-form length test
// l(w') = l(w) + l(w' w^{-1}).
bool leq(const Permutation &w, const Permutation &w_prime);

} // namespace tauweave::weak_order
