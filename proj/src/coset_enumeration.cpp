#include "coclass/coset_enumeration.hpp"

#include <algorithm>
#include <limits>

#include "coclass/errors.hpp"

namespace coclass {

namespace {

constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

class Enumerator {
 public:
  Enumerator(int columns, std::vector<std::vector<int>> relators,
             std::size_t capacity)
      : columns_(columns), relators_(std::move(relators)), capacity_(capacity) {
    table_.assign(capacity_ * static_cast<std::size_t>(columns_), kUndefined);
    parent_.resize(capacity_);
    new_row();
    for (const auto& r : relators_) max_relator_ = std::max(max_relator_, r.size());
  }

  void scan_subgroup(const std::vector<int>& w) { scan_and_fill(0, w); }

  void run() {
    // Worst case for one coset: every relator scan defines all but one
    // letter, then the row is filled.
    const std::size_t reserve =
        relators_.size() * max_relator_ + static_cast<std::size_t>(columns_) + 1;
    std::uint32_t c = 0;
    while (c < next_) {
      if (!live(c)) {
        ++c;
        continue;
      }
      if (capacity_ - next_ < reserve) {
        c = make_room(c, reserve);
        continue;
      }
      for (const auto& r : relators_) {
        scan_and_fill(c, r);
        if (!live(c)) break;
      }
      if (live(c)) {
        for (int x = 0; x < columns_; ++x) {
          if (cell(c, x) == kUndefined) define(c, x);
        }
      }
      ++c;
    }
  }

  // Every relator must trace a closed loop at every coset.
  bool verify() const {
    for (std::uint32_t c = 0; c < next_; ++c) {
      for (const auto& r : relators_) {
        std::uint32_t f = c;
        for (int x : r) f = table_[static_cast<std::size_t>(f) * columns_ + x];
        if (f != c) return false;
      }
    }
    return true;
  }

  CosetTable finish() {
    compact();
    CosetTable t;
    t.index = next_;
    t.columns = columns_;
    t.entries.assign(table_.begin(),
                     table_.begin() + static_cast<std::ptrdiff_t>(next_ * columns_));
    if (std::find(t.entries.begin(), t.entries.end(), kUndefined) != t.entries.end() ||
        !verify()) {
      throw Error("coset enumeration produced an inconsistent table");
    }
    return t;
  }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::uint32_t c = 0; c < next_; ++c) n += live(c) ? 1 : 0;
    return n;
  }

 private:
  std::uint32_t& cell(std::uint32_t c, int x) {
    return table_[static_cast<std::size_t>(c) * columns_ + static_cast<std::size_t>(x)];
  }

  bool live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t new_row() {
    if (next_ >= capacity_) {
      throw EnumerationOverflow("coset enumeration exhausted its workspace of " +
                                std::to_string(capacity_) + " cosets");
    }
    const std::uint32_t d = next_++;
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(d) * columns_, columns_,
                kUndefined);
    parent_[d] = d;
    return d;
  }

  void define(std::uint32_t c, int x) {
    const std::uint32_t d = new_row();
    cell(c, x) = d;
    cell(d, x ^ 1) = c;
  }

  // Scans relator w at coset c, defining new cosets when a gap remains.
  void scan_and_fill(std::uint32_t c, const std::vector<int>& w) {
    scan(c, w, true);
  }

  void scan(std::uint32_t c, const std::vector<int>& w, bool fill) {
    if (w.empty()) return;
    std::uint32_t f = c;
    std::uint32_t b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && cell(f, w[i]) != kUndefined) {
        f = cell(f, w[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && cell(b, w[j] ^ 1) != kUndefined) {
        b = cell(b, w[j] ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        cell(f, w[i]) = b;
        cell(b, w[i] ^ 1) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  std::uint32_t rep(std::uint32_t k) {
    std::uint32_t r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const std::uint32_t n = parent_[k];
      parent_[k] = r;
      k = n;
    }
    return r;
  }

  void merge(std::uint32_t k, std::uint32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::uint32_t e = queue_[qi];
      for (int x = 0; x < columns_; ++x) {
        const std::uint32_t f = cell(e, x);
        if (f == kUndefined) continue;
        cell(f, x ^ 1) = kUndefined;
        const std::uint32_t e1 = rep(e);
        const std::uint32_t f1 = rep(f);
        if (cell(e1, x) != kUndefined) {
          merge(f1, cell(e1, x));
        } else if (cell(f1, x ^ 1) != kUndefined) {
          merge(e1, cell(f1, x ^ 1));
        } else {
          cell(e1, x) = f1;
          cell(f1, x ^ 1) = e1;
        }
      }
    }
  }

  // Lookahead then compaction; returns the renumbered scan position.
  std::uint32_t make_room(std::uint32_t c, std::size_t reserve) {
    for (std::uint32_t k = 0; k < next_; ++k) {
      for (const auto& r : relators_) {
        if (!live(k)) break;
        scan(k, r, false);
      }
    }
    std::uint32_t position = 0;
    for (std::uint32_t k = 0; k < c; ++k) position += live(k) ? 1 : 0;
    compact();
    // Lookahead that frees less than an eighth of the table would only be
    // repeated moments later; treat that as exhaustion.
    if (capacity_ - next_ < std::max(reserve, capacity_ / 8)) {
      throw EnumerationOverflow("coset enumeration exhausted its workspace of " +
                                std::to_string(capacity_) + " cosets");
    }
    // Rows before the scan position stay processed; if c died, the next live
    // row inherits its position.
    return position;
  }

  void compact() {
    std::vector<std::uint32_t> renumber(next_, kUndefined);
    std::uint32_t live_rows = 0;
    for (std::uint32_t k = 0; k < next_; ++k) {
      if (live(k)) renumber[k] = live_rows++;
    }
    for (std::uint32_t k = 0; k < next_; ++k) {
      if (!live(k)) continue;
      const std::uint32_t dst = renumber[k];
      for (int x = 0; x < columns_; ++x) {
        const std::uint32_t v = cell(k, x);
        cell(dst, x) = v == kUndefined ? kUndefined : renumber[rep(v)];
      }
    }
    for (std::uint32_t k = 0; k < live_rows; ++k) parent_[k] = k;
    next_ = live_rows;
  }

  int columns_;
  std::vector<std::vector<int>> relators_;
  std::size_t capacity_;
  std::size_t max_relator_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::uint32_t next_ = 0;
};

std::vector<int> to_columns(const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (int l : free_reduce(w)) cols.push_back(letter_column(l));
  return cols;
}

}  // namespace

CosetTable enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_generators,
                            const EnumerationLimits& limits) {
  p.validate();
  std::vector<std::vector<int>> relators;
  for (const Word& r : p.relators) {
    auto cols = to_columns(r);
    if (!cols.empty()) relators.push_back(std::move(cols));
  }
  // Every cyclic conjugate is scanned implicitly by HLT at every coset, so
  // the relator list is used as given.
  std::size_t workspace = limits.workspace;
  if (workspace == 0) {
    workspace = std::clamp<std::size_t>(limits.max_index * 256, 1 << 16, 1 << 23);
  }
  Enumerator e(2 * p.generator_count(), std::move(relators), workspace);
  for (const Word& h : subgroup_generators) e.scan_subgroup(to_columns(h));
  e.run();
  CosetTable t = e.finish();
  if (t.index > limits.max_index) {
    throw EnumerationOverflow("presented group has index " + std::to_string(t.index) +
                              " above the bound " + std::to_string(limits.max_index));
  }
  return t;
}

}  // namespace coclass
