#include "gln/kl.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "gln/errors.hpp"

namespace gln {

struct KlEngine::Column {
  Permutation w = Permutation::identity(1);
  long lw = 0;
  std::unordered_map<Permutation, KlPoly, PermHash> p;
  struct Mu {
    Permutation z;
    long lz;
    std::int64_t mu;
  };
  std::vector<Mu> mus;
};

namespace {

KlPoly one_poly() { return KlPoly({1}); }

std::string pack_pair(const Permutation& x, const Permutation& w) {
  std::string key(x.word().begin(), x.word().end());
  key.push_back('\0');
  key.append(w.word().begin(), w.word().end());
  return key;
}

std::pair<Permutation, Permutation> unpack_pair(const std::string& key) {
  auto cut = key.find('\0');
  std::vector<std::uint8_t> xw(key.begin(), key.begin() + cut);
  std::vector<std::uint8_t> ww(key.begin() + cut + 1, key.end());
  return {Permutation(std::move(xw)), Permutation(std::move(ww))};
}

std::pair<Permutation, Permutation> sym_canonical(const Permutation& x,
                                                  const Permutation& w) {
  std::pair<Permutation, Permutation> best{x, w};
  auto consider = [&best](Permutation cx, Permutation cw) {
    if (std::tie(cw.word(), cx.word()) < std::tie(best.second.word(), best.first.word()))
      best = {std::move(cx), std::move(cw)};
  };
  consider(x.inverse(), w.inverse());
  consider(x.reverse_complement(), w.reverse_complement());
  consider(x.inverse().reverse_complement(), w.inverse().reverse_complement());
  return best;
}

Permutation extract_block(const Permutation& p, int start, int stop) {
  std::vector<std::uint8_t> word;
  word.reserve(stop - start + 1);
  for (int i = start; i <= stop; ++i)
    word.push_back(static_cast<std::uint8_t>(p(i) - start + 1));
  return Permutation(std::move(word));
}

// All permutations preserving consecutive blocks of the given sizes: the
// lower interval of the block-reversal element.
std::vector<Permutation> young_interval(const std::vector<int>& sizes) {
  std::uint64_t total = 1;
  std::vector<std::vector<std::vector<std::uint8_t>>> per_block;
  int offset = 0;
  for (int sz : sizes) {
    std::vector<std::uint8_t> base(sz);
    std::iota(base.begin(), base.end(), static_cast<std::uint8_t>(offset + 1));
    std::vector<std::vector<std::uint8_t>> alts;
    std::uint64_t fact = 1;
    for (int i = 2; i <= sz; ++i) fact *= i;
    total *= fact;
    if (total > 2000000)
      throw GuardExceeded("lower Bruhat interval too large to enumerate");
    alts.reserve(fact);
    do {
      alts.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    per_block.push_back(std::move(alts));
    offset += sz;
  }
  int n = offset;
  std::vector<Permutation> out;
  out.reserve(total);
  std::vector<std::size_t> idx(per_block.size(), 0);
  for (;;) {
    std::vector<std::uint8_t> word;
    word.reserve(n);
    for (std::size_t b = 0; b < per_block.size(); ++b)
      word.insert(word.end(), per_block[b][idx[b]].begin(), per_block[b][idx[b]].end());
    out.push_back(Permutation(std::move(word)));
    std::size_t b = 0;
    while (b < idx.size() && ++idx[b] == per_block[b].size()) idx[b++] = 0;
    if (b == idx.size()) break;
  }
  return out;
}

}  // namespace

bool is_block_reversal(const Permutation& w) {
  int n = w.size();
  int start = 1, mx = 0;
  for (int i = 1; i <= n; ++i) {
    mx = std::max(mx, w(i));
    if (mx == i) {
      for (int j = start; j <= i; ++j)
        if (w(j) != start + i - j) return false;
      start = i + 1;
    }
  }
  return true;
}

std::vector<std::pair<Permutation, Permutation>> split_stable_blocks(
    const Permutation& x, const Permutation& w) {
  std::vector<std::pair<Permutation, Permutation>> out;
  int n = w.size();
  int start = 1, mx = 0, my = 0;
  for (int i = 1; i <= n; ++i) {
    mx = std::max(mx, x(i));
    my = std::max(my, w(i));
    if (mx <= i && my <= i) {
      out.emplace_back(extract_block(x, start, i), extract_block(w, start, i));
      start = i + 1;
    }
  }
  return out;
}

KlPoly KlEngine::poly(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size())
    throw LengthMismatch("permutation sizes differ: " + std::to_string(x.size()) +
                         " vs " + std::to_string(w.size()));
  if (!bruhat_leq(x, w)) return KlPoly();
  KlPoly out = one_poly();
  for (auto& [bx, bw] : split_stable_blocks(x, w)) {
    if (bx.size() > max_points_)
      throw GuardExceeded("irreducible rank " + std::to_string(bx.size()) +
                          " exceeds limit " + std::to_string(max_points_));
    if (bx == bw) continue;
    out = out * pair_reduced(bx, bw);
  }
  return out;
}

std::int64_t KlEngine::poly_at_one(const Permutation& x, const Permutation& w) {
  return poly(x, w).eval_at_one();
}

KlPoly KlEngine::pair_reduced(const Permutation& x0, const Permutation& w0) {
  auto [x, w] = sym_canonical(x0, w0);
  std::string key = pack_pair(x, w);
  {
    std::shared_lock lk(pair_mu_);
    auto it = pair_memo_.find(key);
    if (it != pair_memo_.end()) {
      std::lock_guard slk(stats_mu_);
      ++stats_.pair_hits;
      return it->second;
    }
  }
  {
    std::lock_guard slk(stats_mu_);
    ++stats_.pair_misses;
  }
  KlPoly result;
  if (is_block_reversal(w)) {
    result = one_poly();
  } else {
    ColumnPtr col = column(w);
    auto it = col->p.find(x);
    if (it == col->p.end())
      throw InternalInconsistency("column of " + w.str() + " is missing " + x.str());
    result = it->second;
  }
  std::unique_lock lk(pair_mu_);
  pair_memo_.emplace(key, result);
  return result;
}

KlEngine::ColumnPtr KlEngine::column(const Permutation& w) {
  {
    std::shared_lock lk(col_mu_);
    auto it = columns_.find(w);
    if (it != columns_.end()) return it->second;
  }
  ColumnPtr col = build_column(w);
  {
    std::lock_guard slk(stats_mu_);
    ++stats_.columns_built;
  }
  std::unique_lock lk(col_mu_);
  auto [it, inserted] = columns_.emplace(w, std::move(col));
  return it->second;
}

KlEngine::ColumnPtr KlEngine::build_column(const Permutation& w) {
  auto col = std::make_shared<Column>();
  col->w = w;
  col->lw = w.length();
  if (is_block_reversal(w)) {
    std::vector<int> sizes;
    int n = w.size(), start = 1, mx = 0;
    for (int i = 1; i <= n; ++i) {
      mx = std::max(mx, w(i));
      if (mx == i) {
        sizes.push_back(i - start + 1);
        start = i + 1;
      }
    }
    for (auto& x : young_interval(sizes)) col->p.emplace(std::move(x), one_poly());
  } else {
    int s = w.first_left_descent();
    Permutation v = w.left_s(s);
    ColumnPtr cv = column(v);
    std::vector<std::pair<const Column::Mu*, ColumnPtr>> zcols;
    for (const auto& mu : cv->mus)
      if (mu.z.left_descent(s)) zcols.emplace_back(&mu, column(mu.z));
    std::unordered_map<Permutation, char, PermHash> seen;
    for (const auto& [x, poly] : cv->p) {
      seen.emplace(x, 0);
      seen.emplace(x.left_s(s), 0);
    }
    for (const auto& [x, ignored] : seen) {
      Permutation sx = x.left_s(s);
      bool sx_less = x.left_descent(s);
      auto lookup = [&cv](const Permutation& y) -> const KlPoly* {
        auto it = cv->p.find(y);
        return it == cv->p.end() ? nullptr : &it->second;
      };
      const KlPoly* pxv = lookup(x);
      const KlPoly* psxv = lookup(sx);
      KlPoly P;
      if (sx_less) {
        if (psxv) P += *psxv;
        if (pxv) P.add_shifted(*pxv, 1, 1);
      } else {
        if (pxv) P += *pxv;
        if (psxv) P.add_shifted(*psxv, 1, 1);
      }
      for (auto& [mu, zc] : zcols) {
        auto it = zc->p.find(x);
        if (it == zc->p.end()) continue;
        long shift2 = col->lw - mu->lz;
        if (shift2 < 0 || shift2 % 2 != 0)
          throw InternalInconsistency("odd degree shift in recursion at " + w.str());
        P.add_shifted(it->second, static_cast<int>(shift2 / 2), -mu->mu);
      }
      long lx = x.length();
      if (P.coeff(0) != 1)
        throw InternalInconsistency("constant term " + std::to_string(P.coeff(0)) +
                                    " for P(" + x.str() + "," + w.str() + ")");
      for (int d = 0; d <= P.degree(); ++d)
        if (P.coeff(d) < 0)
          throw InternalInconsistency("negative coefficient in P(" + x.str() + "," +
                                      w.str() + ")");
      if (x == w ? P.degree() != 0
                 : 2 * P.degree() > col->lw - lx - 1)
        throw InternalInconsistency("degree bound violated for P(" + x.str() + "," +
                                    w.str() + ")");
      col->p.emplace(x, std::move(P));
    }
  }
  for (const auto& [x, P] : col->p) {
    long lx = x.length();
    long d = col->lw - lx;
    if (d >= 1 && d % 2 == 1) {
      std::int64_t m = P.coeff(static_cast<int>((d - 1) / 2));
      if (m != 0) col->mus.push_back({x, lx, m});
    }
  }
  return col;
}

KlEngine::Stats KlEngine::stats() const {
  std::lock_guard lk(stats_mu_);
  return stats_;
}

namespace {

Permutation parse_perm_field(const std::string& field, int n) {
  std::vector<std::uint8_t> word;
  if (n <= 9) {
    if (static_cast<int>(field.size()) != n) throw CorruptEntry("bad permutation field");
    for (char c : field) {
      if (c < '1' || c > '9') throw CorruptEntry("bad permutation digit");
      word.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  } else {
    std::stringstream ss(field);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw CorruptEntry("bad permutation entry");
      }
      if (v < 1 || v > n) throw CorruptEntry("permutation entry out of range");
      word.push_back(static_cast<std::uint8_t>(v));
    }
    if (static_cast<int>(word.size()) != n) throw CorruptEntry("bad permutation arity");
  }
  try {
    return Permutation(std::move(word));
  } catch (const std::exception&) {
    throw CorruptEntry("not a permutation");
  }
}

}  // namespace

void KlEngine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw VersionMismatch("empty cache file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "KLCACHE 1") throw VersionMismatch("unsupported cache header: " + line);
  std::vector<std::pair<std::string, KlPoly>> staged;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ';')) fields.push_back(tok);
    if (fields.size() != 4) throw CorruptEntry("expected 4 fields: " + line);
    int n;
    try {
      std::size_t used = 0;
      n = std::stoi(fields[0], &used);
      if (used != fields[0].size()) throw std::invalid_argument(fields[0]);
    } catch (const std::exception&) {
      throw CorruptEntry("bad rank field: " + line);
    }
    if (n < 1 || n > 64) throw CorruptEntry("rank out of range: " + line);
    Permutation x = parse_perm_field(fields[1], n);
    Permutation w = parse_perm_field(fields[2], n);
    std::vector<std::int64_t> coeffs;
    std::stringstream cs(fields[3]);
    while (std::getline(cs, tok, ',')) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        coeffs.push_back(v);
      } catch (const std::exception&) {
        throw CorruptEntry("bad coefficient: " + line);
      }
    }
    KlPoly p(std::move(coeffs));
    if (x == w || !bruhat_leq(x, w)) throw CorruptEntry("pair out of order: " + line);
    if (p.coeff(0) != 1) throw CorruptEntry("constant term must be 1: " + line);
    for (int d = 0; d <= p.degree(); ++d)
      if (p.coeff(d) < 0) throw CorruptEntry("negative coefficient: " + line);
    if (2 * p.degree() > w.length() - x.length() - 1)
      throw CorruptEntry("degree bound violated: " + line);
    staged.emplace_back(pack_pair(x, w), std::move(p));
  }
  std::unique_lock lk(pair_mu_);
  for (auto& [key, p] : staged) pair_memo_.emplace(std::move(key), std::move(p));
}

void KlEngine::save_cache(const std::string& path) const {
  std::vector<std::string> lines;
  {
    std::shared_lock lk(pair_mu_);
    lines.reserve(pair_memo_.size());
    for (const auto& [key, p] : pair_memo_) {
      auto [x, w] = unpack_pair(key);
      lines.push_back(std::to_string(x.size()) + ";" + x.str() + ";" + w.str() + ";" +
                      p.str());
    }
  }
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file: " + path);
  out << "KLCACHE 1\n";
  for (const auto& l : lines) out << l << "\n";
  if (!out) throw std::runtime_error("write failure on cache file: " + path);
}

}  // namespace gln
