#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flock/lattice.hpp"

namespace flock {

// Dynamic rate table over packed site keys, backed by a Fenwick tree of
// slots: set/erase are O(log capacity), sampling a key proportional to
// its rate is one O(log capacity) descent. Freed slots are recycled so
// long runs do not grow the tree beyond the peak active-site count.
class RateTable {
 public:
  double total() const { return total_; }
  size_t size() const { return count_; }

  double get(SiteKey key) const {
    auto it = slot_of_.find(key);
    return it == slot_of_.end() ? 0.0 : rate_[it->second];
  }

  void set(SiteKey key, double rate) {
    auto it = slot_of_.find(key);
    if (it == slot_of_.end()) {
      insert(key, rate);
    } else {
      uint32_t slot = it->second;
      add(slot, rate - rate_[slot]);
      total_ += rate - rate_[slot];
      rate_[slot] = rate;
    }
  }

  void erase(SiteKey key) {
    auto it = slot_of_.find(key);
    if (it == slot_of_.end()) return;
    uint32_t slot = it->second;
    add(slot, -rate_[slot]);
    total_ -= rate_[slot];
    rate_[slot] = 0.0;
    slot_of_.erase(it);
    free_.push_back(slot);
    --count_;
  }

  // Key whose cumulative rate window contains u; u must lie in
  // [0, total()). Slots emptied by floating-point cancellation are
  // skipped (a measure-zero guard).
  SiteKey sample(double u) const {
    size_t idx = 0;
    size_t bitmask = cap_;
    while (bitmask) {
      size_t next = idx + bitmask;
      if (next <= cap_ && u >= tree_[next]) {
        idx = next;
        u -= tree_[next];
      }
      bitmask >>= 1;
    }
    if (idx >= cap_) idx = cap_ - 1;
    size_t slot = idx;
    while (slot < cap_ && rate_[slot] <= 0.0) ++slot;
    if (slot == cap_) {
      slot = idx;
      while (slot > 0 && rate_[slot] <= 0.0) --slot;
    }
    return key_of_[slot];
  }

  // Exact re-sum of the stored rates, for bookkeeping audits against the
  // incrementally maintained total.
  double recompute_total() const {
    double sum = 0.0;
    for (const auto& [key, slot] : slot_of_) sum += rate_[slot];
    return sum;
  }

  void clear() {
    tree_.clear();
    rate_.clear();
    key_of_.clear();
    slot_of_.clear();
    free_.clear();
    cap_ = count_ = 0;
    total_ = 0.0;
  }

 private:
  void insert(SiteKey key, double rate) {
    uint32_t slot;
    if (!free_.empty()) {
      slot = free_.back();
      free_.pop_back();
    } else {
      if (count_full() == cap_) grow();
      slot = next_slot_++;
    }
    slot_of_.emplace(key, slot);
    key_of_[slot] = key;
    rate_[slot] = rate;
    add(slot, rate);
    total_ += rate;
    ++count_;
  }

  size_t count_full() const { return next_slot_; }

  void grow() {
    size_t new_cap = cap_ == 0 ? 64 : cap_ * 2;
    std::vector<double> old_rate = std::move(rate_);
    std::vector<SiteKey> old_key = std::move(key_of_);
    rate_.assign(new_cap, 0.0);
    key_of_.assign(new_cap, 0);
    tree_.assign(new_cap + 1, 0.0);
    cap_ = new_cap;
    for (size_t s = 0; s < old_rate.size(); ++s) {
      rate_[s] = old_rate[s];
      key_of_[s] = old_key[s];
      if (rate_[s] != 0.0) add(uint32_t(s), rate_[s]);
    }
  }

  void add(uint32_t slot, double delta) {
    for (size_t i = slot + 1; i <= cap_; i += i & (~i + 1)) {
      tree_[i] += delta;
    }
  }

  std::vector<double> tree_;   // 1-based Fenwick array over slots
  std::vector<double> rate_;   // rate per slot
  std::vector<SiteKey> key_of_;
  std::unordered_map<SiteKey, uint32_t> slot_of_;
  std::vector<uint32_t> free_;
  size_t cap_ = 0;
  size_t count_ = 0;
  uint32_t next_slot_ = 0;
  double total_ = 0.0;
};

}  // namespace flock
