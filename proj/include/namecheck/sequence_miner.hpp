// Copyright 2026 The namecheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed sequential pattern mining over single-item sequences.
//
// Depth-first search over a vertical representation: each pattern keeps, per
// supporting sequence, the earliest position where it can end. A pattern is
// pruned when an already visited super-pattern has the same support and the
// same projected database size, since both then have identical extensions.
// Survivors are filtered for closure.

#ifndef NAMECHECK_SEQUENCE_MINER_HPP
#define NAMECHECK_SEQUENCE_MINER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "namecheck/abstraction.hpp"
#include "namecheck/error.hpp"

namespace namecheck {

template <typename Item>
struct ClosedPattern {
  std::vector<Item> items;
  std::size_t support = 0;

  friend bool operator==(const ClosedPattern&, const ClosedPattern&) = default;
  friend bool operator<(const ClosedPattern& a, const ClosedPattern& b) {
    return a.items < b.items;
  }
};

/// Minimum support: an absolute sequence count, or a fraction of the
/// database size rounded up.
class MinSupport {
 public:
  static MinSupport absolute(std::size_t count) { return MinSupport(false, count, 0); }
  static MinSupport fraction(double value) { return MinSupport(true, 0, value); }

  /// Resolves against a database size. Throws SupportOutOfRange.
  std::size_t resolve(std::size_t db_size) const {
    if (!is_fraction_) {
      if (count_ == 0) throw SupportOutOfRange("minimum support must be at least 1");
      return count_;
    }
    if (!(fraction_ > 0.0 && fraction_ <= 1.0)) {
      throw SupportOutOfRange("minimum support fraction must be in (0, 1]");
    }
    const auto n = static_cast<std::size_t>(
        std::ceil(fraction_ * static_cast<double>(db_size) - 1e-9));
    return std::max<std::size_t>(1, n);
  }

  /// Parses "3" (absolute) or "0.25" (fraction). Throws SupportOutOfRange.
  static MinSupport parse(const std::string& text) {
    try {
      std::size_t used = 0;
      if (text.find_first_of(".eE") == std::string::npos) {
        const long long v = std::stoll(text, &used);
        if (used != text.size() || v < 1) throw std::invalid_argument(text);
        return absolute(static_cast<std::size_t>(v));
      }
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      MinSupport ms = fraction(v);
      ms.resolve(1);
      return ms;
    } catch (const std::logic_error&) {
      throw SupportOutOfRange("invalid minimum support '" + text +
                              "': expected a count >= 1 or a fraction in (0, 1]");
    }
  }

 private:
  MinSupport(bool is_fraction, std::size_t count, double fraction)
      : is_fraction_(is_fraction), count_(count), fraction_(fraction) {}
  bool is_fraction_;
  std::size_t count_;
  double fraction_;
};

struct MinerConfig {
  MinSupport min_support = MinSupport::absolute(1);
  /// Longest pattern to report, 0 for unbounded. With a bound, a pattern is
  /// closed when no frequent super-pattern of at most this length has the
  /// same support.
  std::size_t max_length = 0;
};

/// True if `sub` is a (gapped) subsequence of `seq`.
template <typename Item>
bool is_subsequence(const std::vector<Item>& sub, const std::vector<Item>& seq) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < seq.size() && i < sub.size(); ++j) {
    if (sub[i] == seq[j]) ++i;
  }
  return i == sub.size();
}

namespace detail {

template <typename Item>
class ClosedMiner {
 public:
  ClosedMiner(const std::vector<std::vector<Item>>& db, std::size_t min_support,
              std::size_t max_length)
      : db_(db), min_support_(min_support), max_length_(max_length) {
    std::set<Item> alphabet;
    for (const auto& seq : db_) alphabet.insert(seq.begin(), seq.end());
    items_.assign(alphabet.begin(), alphabet.end());
    positions_.resize(db_.size());
    for (std::size_t s = 0; s < db_.size(); ++s) {
      for (std::size_t p = 0; p < db_[s].size(); ++p) {
        positions_[s][index_of(db_[s][p])].push_back(p);
      }
    }
  }

  std::vector<ClosedPattern<Item>> run() {
    IdList all;
    for (std::size_t s = 0; s < db_.size(); ++s) all.push_back({s, kBeforeStart});
    std::vector<std::size_t> prefix;
    extend(prefix, all);
    return close_candidates();
  }

 private:
  static constexpr std::size_t kBeforeStart = static_cast<std::size_t>(-1);
  struct Entry {
    std::size_t seq;
    std::size_t end;  // earliest end position, kBeforeStart for the empty prefix
  };
  using IdList = std::vector<Entry>;

  struct Candidate {
    std::vector<std::size_t> items;
    std::vector<std::size_t> seqs;
  };

  std::size_t index_of(const Item& item) const {
    return static_cast<std::size_t>(
        std::lower_bound(items_.begin(), items_.end(), item) - items_.begin());
  }

  IdList project(const IdList& ids, std::size_t item) const {
    IdList out;
    for (const Entry& e : ids) {
      const auto& by_item = positions_[e.seq];
      auto it = by_item.find(item);
      if (it == by_item.end()) continue;
      const auto& pos = it->second;
      auto next = e.end == kBeforeStart ? pos.begin()
                                        : std::upper_bound(pos.begin(), pos.end(), e.end);
      if (next != pos.end()) out.push_back({e.seq, *next});
    }
    return out;
  }

  std::size_t projected_size(const IdList& ids) const {
    std::size_t total = 0;
    for (const Entry& e : ids) total += db_[e.seq].size() - e.end - 1;
    return total;
  }

  // A pattern whose projection equals that of a visited super-pattern has the
  // same extensions, so its subtree holds no closed pattern. Only valid when
  // the search depth is unbounded.
  bool prunable(const std::vector<std::size_t>& pattern, const IdList& ids) {
    if (max_length_ != 0) return false;
    const auto key = std::make_pair(ids.size(), projected_size(ids));
    auto& bucket = visited_[key];
    for (const auto& other : bucket) {
      if (other.size() > pattern.size() && is_subsequence(pattern, other)) return true;
    }
    bucket.push_back(pattern);
    return false;
  }

  void extend(std::vector<std::size_t>& prefix, const IdList& ids) {
    if (max_length_ != 0 && prefix.size() >= max_length_) return;
    for (std::size_t item = 0; item < items_.size(); ++item) {
      IdList next = project(ids, item);
      if (next.size() < min_support_) continue;
      prefix.push_back(item);
      if (!prunable(prefix, next)) {
        Candidate c;
        c.items = prefix;
        for (const Entry& e : next) c.seqs.push_back(e.seq);
        candidates_.push_back(std::move(c));
        extend(prefix, next);
      }
      prefix.pop_back();
    }
  }

  std::vector<ClosedPattern<Item>> close_candidates() const {
    // Equal support between a pattern and its super-pattern implies the same
    // supporting sequence set, so closure only needs to look within groups.
    std::map<std::vector<std::size_t>, std::vector<const Candidate*>> groups;
    for (const auto& c : candidates_) groups[c.seqs].push_back(&c);
    std::vector<ClosedPattern<Item>> out;
    for (const auto& [seqs, members] : groups) {
      for (const Candidate* p : members) {
        bool closed = true;
        for (const Candidate* q : members) {
          if (q->items.size() > p->items.size() && is_subsequence(p->items, q->items)) {
            closed = false;
            break;
          }
        }
        if (!closed) continue;
        ClosedPattern<Item> pattern;
        for (std::size_t i : p->items) pattern.items.push_back(items_[i]);
        pattern.support = seqs.size();
        out.push_back(std::move(pattern));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<std::vector<Item>>& db_;
  std::size_t min_support_;
  std::size_t max_length_;
  std::vector<Item> items_;
  std::vector<std::map<std::size_t, std::vector<std::size_t>>> positions_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>>
      visited_;
  std::vector<Candidate> candidates_;
};

}  // namespace detail

/// All frequent closed sequential patterns of `db`, sorted lexicographically
/// by items. Support counts each sequence at most once.
/// Throws EmptyDatabase (no sequences) and SupportOutOfRange.
template <typename Item>
std::vector<ClosedPattern<Item>> mine_closed(const std::vector<std::vector<Item>>& db,
                                             const MinerConfig& cfg) {
  if (db.empty()) throw EmptyDatabase("sequence database is empty");
  const std::size_t min_support = cfg.min_support.resolve(db.size());
  if (min_support > db.size()) return {};
  detail::ClosedMiner<Item> miner(db, min_support, cfg.max_length);
  return miner.run();
}

inline std::vector<ClosedPattern<int>> mine_closed(const SequenceDatabase& db,
                                                   const MinerConfig& cfg) {
  return mine_closed<int>(db.sequences, cfg);
}

/// Keeps patterns that begin with Start and end with End.
inline std::vector<ClosedPattern<int>> filter_spanning(
    const std::vector<ClosedPattern<int>>& patterns,
    const CodeAlphabet& alphabet = CodeAlphabet::standard()) {
  const int start = alphabet.encode(Symbol::Start);
  const int end = alphabet.encode(Symbol::End);
  std::vector<ClosedPattern<int>> out;
  for (const auto& p : patterns) {
    if (p.items.size() >= 2 && p.items.front() == start && p.items.back() == end) {
      out.push_back(p);
    }
  }
  return out;
}

struct PatternGroup {
  std::string key;
  std::vector<ClosedPattern<int>> patterns;

  std::size_t total_support() const {
    std::size_t total = 0;
    for (const auto& p : patterns) total += p.support;
    return total;
  }
};

struct ProtopatternReport {
  /// Keyed by the compound statements present: "IfElse", "Loop",
  /// "TryCatch" joined with '+', or "None". Every pattern is in exactly one.
  std::vector<PatternGroup> by_control_flow;
  /// Keyed by the skeleton of the first `prefix_length` codes.
  std::vector<PatternGroup> by_prefix;
};

inline std::string control_flow_key(const std::vector<int>& codes,
                                    const CodeAlphabet& alphabet) {
  bool has_if = false;
  bool has_loop = false;
  bool has_try = false;
  for (int code : codes) {
    if (!alphabet.contains(code)) continue;
    switch (alphabet.decode(code)) {
      case Symbol::IfOpen:
      case Symbol::IfClose:
      case Symbol::ElseOpen:
      case Symbol::ElseClose:
        has_if = true;
        break;
      case Symbol::LoopOpen:
      case Symbol::LoopClose:
        has_loop = true;
        break;
      case Symbol::TryOpen:
      case Symbol::TryClose:
      case Symbol::CatchOpen:
      case Symbol::CatchClose:
      case Symbol::FinallyOpen:
      case Symbol::FinallyClose:
        has_try = true;
        break;
      default:
        break;
    }
  }
  std::string key;
  auto add = [&](bool present, const char* name) {
    if (!present) return;
    if (!key.empty()) key += '+';
    key += name;
  };
  add(has_if, "IfElse");
  add(has_loop, "Loop");
  add(has_try, "TryCatch");
  return key.empty() ? "None" : key;
}

/// Groups mined patterns for manual review. Groups are ordered by key;
/// patterns inside a group keep their input order.
inline ProtopatternReport group_protopatterns(
    const std::vector<ClosedPattern<int>>& patterns,
    const CodeAlphabet& alphabet = CodeAlphabet::standard(),
    std::size_t prefix_length = 3) {
  std::map<std::string, std::vector<ClosedPattern<int>>> flow;
  std::map<std::string, std::vector<ClosedPattern<int>>> prefix;
  for (const auto& p : patterns) {
    flow[control_flow_key(p.items, alphabet)].push_back(p);
    const std::size_t n = std::min(prefix_length, p.items.size());
    std::vector<int> head(p.items.begin(), p.items.begin() + static_cast<long>(n));
    prefix[reconstruct(head, alphabet)].push_back(p);
  }
  ProtopatternReport report;
  for (auto& [k, v] : flow) report.by_control_flow.push_back({k, std::move(v)});
  for (auto& [k, v] : prefix) report.by_prefix.push_back({k, std::move(v)});
  return report;
}

}  // namespace namecheck

#endif  // NAMECHECK_SEQUENCE_MINER_HPP
