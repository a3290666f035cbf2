#include "tauweave/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tauweave::weak_order {

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  const int n1 = static_cast<int>(images_.size());
  if (n1 < 1)
    throw std::invalid_argument("Permutation: empty one-line notation");
  std::vector<bool> seen(n1, false);
  for (int v : images_) {
    if (v < 1 || v > n1 || seen[v - 1])
      throw std::invalid_argument("Permutation: not a bijection on 1..n+1");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int order) {
  std::vector<int> img(order);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent_transposition(int order, int i) {
  if (i < 1 || i >= order)
    throw std::out_of_range("adjacent_transposition: generator index");
  auto w = identity(order);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

Permutation Permutation::longest_element(int order) {
  std::vector<int> img(order);
  for (int a = 1; a <= order; ++a)
    img[a - 1] = order - a + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int a = 1; a <= order(); ++a)
    img[images_[a - 1] - 1] = a;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation &other) const {
  if (order() != other.order())
    throw std::invalid_argument("compose: order mismatch");
  std::vector<int> img(images_.size());
  for (int a = 1; a <= order(); ++a)
    img[a - 1] = (*this)(other(a));
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int a = 1; a <= order(); ++a)
    if (images_[a - 1] != a)
      return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k)
      s += ",";
    s += std::to_string(images_[k]);
  }
  return s + ")";
}

long inversions(const Permutation &w) {
  long count = 0;
  const int n1 = w.order();
  for (int a = 1; a <= n1; ++a)
    for (int b = a + 1; b <= n1; ++b)
      if (w(a) > w(b))
        ++count;
  return count;
}

std::pair<Permutation, int> left_multiply(int i, const Permutation &w) {
  if (i < 1 || i >= w.order())
    throw std::out_of_range("left_multiply: generator index");
  std::vector<int> img = w.images();
  for (auto &v : img) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  const auto winv = w.inverse();
  const int delta = winv(i) < winv(i + 1) ? +1 : -1;
  return {Permutation(std::move(img)), delta};
}

Permutation word_product(int order, const std::vector<int> &letters) {
  auto w = Permutation::identity(order);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w = left_multiply(*it, w).first;
  return w;
}

bool is_reduced(int order, const std::vector<int> &letters) {
  return inversions(word_product(order, letters)) ==
         static_cast<long>(letters.size());
}

ExchangeDrop exchange_drop(int order, const std::vector<int> &letters) {
  if (is_reduced(order, letters))
    throw std::invalid_argument("exchange_drop: word is already reduced");
  // Scan for the first position p where the running prefix u = s_{v0}...s_{v(p-1)}
  // has u(v[p]) > u(v[p]+1); then locate the matching letter to its left.
  auto prefix = Permutation::identity(order);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    const int i = letters[p];
    if (prefix(i) > prefix(i + 1)) {
      int s = i, t = i + 1;
      for (std::size_t q = p; q-- > 0;) {
        const int g = letters[q];
        if (s == g && t == g + 1) {
          ExchangeDrop out;
          out.removed_left = q;
          out.removed_right = p;
          for (std::size_t m = 0; m < letters.size(); ++m)
            if (m != q && m != p)
              out.word.push_back(letters[m]);
          return out;
        }
        if (s == g)
          s = g + 1;
        else if (s == g + 1)
          s = g;
        if (t == g)
          t = g + 1;
        else if (t == g + 1)
          t = g;
      }
      throw std::logic_error("exchange_drop: no matching letter found");
    }
    prefix = prefix.compose(Permutation::adjacent_transposition(order, i));
  }
  throw std::logic_error("exchange_drop: non-reduced word without violation");
}

std::vector<int> reduced_word(const Permutation &w) {
  std::vector<int> word;
  auto cur = w;
  while (!cur.is_identity()) {
    for (int i = 1; i < cur.order(); ++i) {
      auto [next, delta] = left_multiply(i, cur);
      if (delta == -1) {
        word.push_back(i);
        cur = std::move(next);
        break;
      }
    }
  }
  return word;
}

bool leq(const Permutation &w, const Permutation &w_prime) {
  if (w.order() != w_prime.order())
    throw std::invalid_argument("leq: order mismatch");
  return inversions(w_prime) ==
         inversions(w) + inversions(w_prime.compose(w.inverse()));
}

} // namespace tauweave::weak_order
