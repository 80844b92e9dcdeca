#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <vector>

namespace lmss {

/// Sorted, duplicate-free set of small integer ids. The tag keeps vertex and
/// edge sets from mixing at compile time.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  IndexSet(std::initializer_list<int> ids)
      : IndexSet(std::vector<int>(ids)) {}

  static IndexSet single(int id) { return IndexSet({id}); }

  bool contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }

  IndexSet plus(int id) const {
    if (contains(id)) return *this;
    std::vector<int> out = ids_;
    out.insert(std::upper_bound(out.begin(), out.end(), id), id);
    IndexSet r;
    r.ids_ = std::move(out);
    return r;
  }

  IndexSet minus(int id) const {
    IndexSet r = *this;
    auto it = std::lower_bound(r.ids_.begin(), r.ids_.end(), id);
    if (it != r.ids_.end() && *it == id) r.ids_.erase(it);
    return r;
  }

  IndexSet unite(const IndexSet& other) const {
    IndexSet r;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }

  IndexSet intersect(const IndexSet& other) const {
    IndexSet r;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }

  IndexSet difference(const IndexSet& other) const {
    IndexSet r;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }

  bool subset_of(const IndexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  bool intersects(const IndexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<int> ids_;
};

struct VertexTag {};
struct EdgeTag {};

using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

}  // namespace lmss
