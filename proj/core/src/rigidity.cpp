#include "tauweave/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

namespace tauweave::xi {

namespace {

bool g_sabotage = false;

int forward_t_rule(const XiIndex &i, const XiIndex &j, int t_prev, int s_prev) {
  const int mi = i.m(), mj = j.m();
  if (s_prev <= mj - 1) {
    for (int t = mi + 1; t >= 0; --t)
      if (i.at(2 * t - 2) < j.at(2 * s_prev + 1))
        return t;
    throw std::logic_error("forward t-rule: empty max set");
  }
  if (s_prev >= mj && t_prev <= mi)
    return mi + 1;
  if (t_prev >= mi + 1)
    return mi + 2;
  throw std::logic_error("forward t-rule: no branch applies");
}

int forward_s_rule(const XiIndex &i, const XiIndex &j, int t_cur, int s_prev) {
  const int mi = i.m(), mj = j.m();
  if (t_cur <= mi) {
    for (int s = mj; s >= 0; --s)
      if (j.at(2 * s - 1) < i.at(2 * t_cur))
        return s;
    throw std::logic_error("forward s-rule: empty max set");
  }
  if (s_prev < mj && t_cur == mi + 1)
    return mj;
  if (s_prev >= mj)
    return mj + 1;
  throw std::logic_error("forward s-rule: no branch applies");
}

int backward_s_rule(const XiIndex &i, const XiIndex &j, int t_next, int s_next) {
  const int mj = j.m();
  if (t_next >= 0) {
    for (int s = -1; s <= mj; ++s)
      if (j.at(2 * s + 3) > i.at(2 * t_next))
        return s;
    throw std::logic_error("backward s-rule: empty min set");
  }
  if (t_next <= -1 && s_next >= 0)
    return -1;
  if (s_next <= -1)
    return -2;
  throw std::logic_error("backward s-rule: no branch applies");
}

int backward_t_rule(const XiIndex &i, const XiIndex &j, int s_cur, int t_next) {
  const int mi = i.m();
  if (s_cur >= 0) {
    for (int t = -1; t <= mi; ++t)
      if (i.at(2 * t + 2) > j.at(2 * s_cur + 1))
        return t;
    throw std::logic_error("backward t-rule: empty min set");
  }
  if (s_cur == -1 && t_next >= 0)
    return -1;
  if (t_next <= -1)
    return -2;
  throw std::logic_error("backward t-rule: no branch applies");
}

// Verbatim mirrored recursions (label order reversed, sentinels swapped).
int mirrored_t_rule(const XiIndex &i, const XiIndex &j, int t_prev, int s_prev) {
  const int mi = i.m();
  if (s_prev >= 1) {
    for (int t = -1; t <= mi; ++t)
      if (i.at(2 * t + 2) > j.at(2 * s_prev - 1))
        return t;
    throw std::logic_error("mirrored t-rule: empty min set");
  }
  if (s_prev <= 0 && t_prev >= 0)
    return -1;
  if (t_prev <= -1)
    return -2;
  throw std::logic_error("mirrored t-rule: no branch applies");
}

int mirrored_s_rule(const XiIndex &i, const XiIndex &j, int t_cur, int s_prev) {
  const int mj = j.m();
  if (t_cur >= 0) {
    for (int s = 0; s <= mj; ++s)
      if (j.at(2 * s + 1) > i.at(2 * t_cur))
        return s;
    throw std::logic_error("mirrored s-rule: empty min set");
  }
  if (t_cur == -1 && s_prev >= 1)
    return 0;
  if (s_prev <= 0)
    return -1;
  throw std::logic_error("mirrored s-rule: no branch applies");
}

int mirrored_back_s_rule(const XiIndex &i, const XiIndex &j, int t_next,
                         int s_next) {
  const int mi = i.m(), mj = j.m();
  if (t_next <= mi) {
    for (int s = mj + 1; s >= 0; --s)
      if (j.at(2 * s - 3) < i.at(2 * t_next))
        return s;
    throw std::logic_error("mirrored back s-rule: empty max set");
  }
  if (t_next == mi + 1 && s_next <= mj)
    return mj + 1;
  if (s_next >= mj + 1)
    return mj + 2;
  throw std::logic_error("mirrored back s-rule: no branch applies");
}

int mirrored_back_t_rule(const XiIndex &i, const XiIndex &j, int s_cur,
                         int t_next) {
  const int mi = i.m(), mj = j.m();
  if (s_cur <= mj) {
    for (int t = mi + 1; t >= 0; --t)
      if (i.at(2 * t - 2) < j.at(2 * s_cur - 1))
        return t;
    throw std::logic_error("mirrored back t-rule: empty max set");
  }
  if (s_cur >= mj + 1 && t_next <= mi)
    return mi + 1;
  if (t_next >= mi + 1)
    return mi + 2;
  throw std::logic_error("mirrored back t-rule: no branch applies");
}

} // namespace

RigiditySequences build_sequences(const XiIndex &i, const XiIndex &j, int t,
                                  int s, SequenceKind kind) {
  const int mi = i.m(), mj = j.m();
  if (kind == SequenceKind::forward) {
    if (!(0 < i.at(2 * t) && i.at(2 * t) < j.at(2 * s + 1) &&
          j.at(2 * s + 1) < i.rank + 1))
      throw std::invalid_argument("build_sequences: forward pair out of range");
  } else {
    if (!(i.rank + 1 > i.at(2 * t) && i.at(2 * t) > j.at(2 * s - 1) &&
          j.at(2 * s - 1) > 0))
      throw std::invalid_argument("build_sequences: mirrored pair out of range");
  }

  RigiditySequences seq;
  seq.t_plus = {t};
  seq.s_plus = {s};
  seq.t_minus = {t};
  seq.s_minus = {s};
  const int cap = 2 * (mi + mj + 4);

  if (kind == SequenceKind::forward) {
    while (!(seq.t_plus.back() == mi + 2 && seq.s_plus.back() == mj + 1)) {
      const int tr = forward_t_rule(i, j, seq.t_plus.back(), seq.s_plus.back());
      const int sr = forward_s_rule(i, j, tr, seq.s_plus.back());
      seq.t_plus.push_back(tr);
      seq.s_plus.push_back(sr);
      if (static_cast<int>(seq.t_plus.size()) > cap)
        throw std::logic_error("build_sequences: plus recursion exceeded cap");
    }
    while (!(seq.t_minus.back() == -2 && seq.s_minus.back() == -2)) {
      const int sr = backward_s_rule(i, j, seq.t_minus.back(), seq.s_minus.back());
      const int tr = backward_t_rule(i, j, sr, seq.t_minus.back());
      seq.s_minus.push_back(sr);
      seq.t_minus.push_back(tr);
      if (static_cast<int>(seq.t_minus.size()) > cap)
        throw std::logic_error("build_sequences: minus recursion exceeded cap");
    }
  } else {
    while (!(seq.t_plus.back() == -2 && seq.s_plus.back() == -1)) {
      const int tr = mirrored_t_rule(i, j, seq.t_plus.back(), seq.s_plus.back());
      const int sr = mirrored_s_rule(i, j, tr, seq.s_plus.back());
      seq.t_plus.push_back(tr);
      seq.s_plus.push_back(sr);
      if (static_cast<int>(seq.t_plus.size()) > cap)
        throw std::logic_error("build_sequences: plus recursion exceeded cap");
    }
    while (!(seq.t_minus.back() == mi + 2 && seq.s_minus.back() == mj + 2)) {
      const int sr =
          mirrored_back_s_rule(i, j, seq.t_minus.back(), seq.s_minus.back());
      const int tr = mirrored_back_t_rule(i, j, sr, seq.t_minus.back());
      seq.s_minus.push_back(sr);
      seq.t_minus.push_back(tr);
      if (static_cast<int>(seq.t_minus.size()) > cap)
        throw std::logic_error("build_sequences: minus recursion exceeded cap");
    }
  }
  return seq;
}

bool condition1_holds(const XiIndex &i, const XiIndex &j,
                      const RigiditySequences &seq, SequenceKind kind) {
  const int mi = i.m(), mj = j.m();
  const int R = static_cast<int>(seq.t_plus.size()) - 1;
  if (kind == SequenceKind::forward) {
    for (int r = 0; r <= R; ++r) {
      const int tr = seq.t_plus[r], sr = seq.s_plus[r];
      if (tr <= mi) {
        const int lhs = i.at(2 * tr), mid = i.at(2 * tr + 1),
                  rhs = j.at(2 * sr + 1);
        const bool ok = g_sabotage ? (lhs < mid && mid >= rhs)
                                   : (lhs < mid && mid <= rhs);
        if (!ok)
          return false;
      }
      if (r >= 1) {
        const int tp = seq.t_plus[r], sp = seq.s_plus[r - 1];
        if (tp <= mi + 1)
          if (!(i.at(2 * tp - 2) < i.at(2 * tp - 1) &&
                i.at(2 * tp - 1) <= j.at(2 * sp + 1)))
            return false;
        if (seq.s_plus[r] <= mj) {
          if (!(j.at(2 * sp + 1) < j.at(2 * sp + 2) &&
                j.at(2 * sp + 2) <= i.at(2 * tp)))
            return false;
          if (!(j.at(2 * seq.s_plus[r] - 1) < j.at(2 * seq.s_plus[r]) &&
                j.at(2 * seq.s_plus[r]) <= i.at(2 * tp)))
            return false;
        }
      }
    }
    return true;
  }
  // mirrored, verbatim
  for (int r = 0; r <= R; ++r) {
    const int tr = seq.t_plus[r], sr = seq.s_plus[r];
    if (tr >= 0)
      if (!(i.at(2 * tr) > i.at(2 * tr - 1) &&
            i.at(2 * tr - 1) >= j.at(2 * sr - 1)))
        return false;
    if (r >= 1) {
      const int sp = seq.s_plus[r - 1];
      if (tr >= -1)
        if (!(i.at(2 * tr + 2) > i.at(2 * tr + 1) &&
              i.at(2 * tr + 1) >= j.at(2 * sp - 1)))
          return false;
      if (sr >= 0) {
        if (!(j.at(2 * sp - 1) > j.at(2 * sp - 2) &&
              j.at(2 * sp - 2) >= i.at(2 * tr)))
          return false;
        if (!(j.at(2 * sr + 1) > j.at(2 * sr) && j.at(2 * sr) >= i.at(2 * tr)))
          return false;
      }
    }
  }
  return true;
}

bool condition2_holds(const XiIndex &i, const XiIndex &j,
                      const RigiditySequences &seq, SequenceKind kind) {
  const int mi = i.m(), mj = j.m();
  const int R = static_cast<int>(seq.t_minus.size()) - 1;
  if (kind == SequenceKind::forward) {
    for (int k = 0; k <= R; ++k) { // k = -r
      const int tr = seq.t_minus[k], sr = seq.s_minus[k];
      if (sr >= 0)
        if (!(j.at(2 * sr + 1) > j.at(2 * sr) && j.at(2 * sr) >= i.at(2 * tr)))
          return false;
      if (k >= 1) {
        const int tn = seq.t_minus[k - 1]; // t_{r+1}
        if (sr >= -1)
          if (!(j.at(2 * sr + 3) > j.at(2 * sr + 2) &&
                j.at(2 * sr + 2) >= i.at(2 * tn)))
            return false;
        if (tr >= -1) {
          if (!(i.at(2 * tn) > i.at(2 * tn - 1) &&
                i.at(2 * tn - 1) >= j.at(2 * sr + 1)))
            return false;
          if (!(i.at(2 * tr + 2) > i.at(2 * tr + 1) &&
                i.at(2 * tr + 1) >= j.at(2 * sr + 1)))
            return false;
        }
      }
    }
    return true;
  }
  // mirrored, verbatim (the last clause also covers r = 0: the relabeling
  // k |-> n+1-k maps it onto the forward lemma's r <= 0 clause)
  for (int k = 0; k <= R; ++k) {
    const int tr = seq.t_minus[k], sr = seq.s_minus[k];
    if (sr <= mj)
      if (!(j.at(2 * sr - 1) < j.at(2 * sr) && j.at(2 * sr) <= i.at(2 * tr)))
        return false;
    if (k >= 1) {
      const int tn = seq.t_minus[k - 1]; // t_{r+1}
      if (sr <= mj + 1)
        if (!(j.at(2 * sr - 3) < j.at(2 * sr - 2) &&
              j.at(2 * sr - 2) <= i.at(2 * tn)))
          return false;
      if (tr <= mi + 1) {
        if (!(i.at(2 * tn) < i.at(2 * tn + 1) &&
              i.at(2 * tn + 1) <= j.at(2 * sr - 1)))
          return false;
        if (!(i.at(2 * tr - 2) < i.at(2 * tr - 1) &&
              i.at(2 * tr - 1) <= j.at(2 * sr - 1)))
          return false;
      }
    }
  }
  return true;
}

namespace {

bool pair_admissible_forward(const XiIndex &i, const XiIndex &j, int t, int s) {
  return 0 < i.at(2 * t) && i.at(2 * t) < j.at(2 * s + 1) &&
         j.at(2 * s + 1) < i.rank + 1;
}

bool forward_pair_ok(const XiIndex &i, const XiIndex &j, int t, int s) {
  const auto seq = build_sequences(i, j, t, s, SequenceKind::forward);
  return condition1_holds(i, j, seq, SequenceKind::forward) ||
         condition2_holds(i, j, seq, SequenceKind::forward);
}

bool mirrored_pair_ok_direct(const XiIndex &i, const XiIndex &j, int t, int s) {
  const auto seq = build_sequences(i, j, t, s, SequenceKind::mirrored_direct);
  return condition1_holds(i, j, seq, SequenceKind::mirrored_direct) ||
         condition2_holds(i, j, seq, SequenceKind::mirrored_direct);
}

} // namespace

void set_criterion_sabotage(bool enabled) { g_sabotage = enabled; }
bool criterion_sabotage() { return g_sabotage; }

bool hom_vanishes(const XiIndex &i, const XiIndex &j,
                  const CriterionOptions &opts) {
  if (i.rank != j.rank)
    throw std::invalid_argument("hom_vanishes: rank mismatch");
  const int mi = i.m(), mj = j.m();

  // Degeneracy: a shared label between degree -1 of X_i and degree 0 of X_j
  // carries an identity component no homotopy can cancel.
  for (int p = 0; p <= mi; ++p)
    for (int q = 0; q <= mj - 1; ++q)
      if (i.at(2 * p) == j.at(2 * q + 1))
        return false;

  for (int t = 0; t <= mi; ++t)
    for (int s = 0; s <= mj - 1; ++s)
      if (pair_admissible_forward(i, j, t, s))
        if (!forward_pair_ok(i, j, t, s))
          return false;

  const XiIndex im = i.mirrored(), jm = j.mirrored();
  for (int t = 0; t <= mi; ++t)
    for (int s = 1; s <= mj; ++s) {
      if (!(i.rank + 1 > i.at(2 * t) && i.at(2 * t) > j.at(2 * s - 1) &&
            j.at(2 * s - 1) > 0))
        continue;
      const bool via_relabel = forward_pair_ok(im, jm, mi - t, mj - s);
      if (opts.cross_check_mirror) {
        const bool direct = mirrored_pair_ok_direct(i, j, t, s);
        if (direct != via_relabel)
          throw std::logic_error("hom_vanishes: mirror cross-check mismatch at " +
                                 i.to_string() + ", " + j.to_string());
      }
      if (!via_relabel)
        return false;
    }
  return true;
}

bool compatible(const XiIndex &i, const XiIndex &j,
                const CriterionOptions &opts) {
  return hom_vanishes(i, j, opts) && hom_vanishes(j, i, opts);
}

CompatibilityTable::CompatibilityTable(int n, const CriterionOptions &opts)
    : n_(n), xi_(enumerate_xi(n)) {
  hom_.assign(xi_.size() * xi_.size(), 0);
  for (std::size_t a = 0; a < xi_.size(); ++a)
    for (std::size_t b = 0; b < xi_.size(); ++b)
      hom_[a * xi_.size() + b] = hom_vanishes(xi_[a], xi_[b], opts) ? 1 : 0;
}

std::size_t CompatibilityTable::index_of(const XiIndex &i) const {
  auto key = [](const XiIndex &x) {
    return std::make_pair(x.entries.size(), x.entries);
  };
  auto it = std::lower_bound(xi_.begin(), xi_.end(), i,
                             [&](const XiIndex &a, const XiIndex &b) {
                               return key(a) < key(b);
                             });
  if (it == xi_.end() || it->entries != i.entries)
    throw std::out_of_range("CompatibilityTable::index_of");
  return static_cast<std::size_t>(it - xi_.begin());
}

} // namespace tauweave::xi
