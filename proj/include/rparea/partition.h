#ifndef RPAREA_PARTITION_H_
#define RPAREA_PARTITION_H_

#include <cstddef>
#include <vector>

#include "rparea/sampling.h"

namespace rparea {

// Disjoint groups of goods covering [0, K).
class PartitionSpec {
 public:
  // Throws DomainError unless the groups are nonempty, disjoint and cover
  // every good exactly once.
  PartitionSpec(std::vector<std::vector<std::size_t>> groups, std::size_t goods);

  // One group holding every good.
  static PartitionSpec whole(std::size_t goods);
  // Contiguous groups of `group_size` goods; K must be a multiple of it.
  static PartitionSpec contiguous(std::size_t goods, std::size_t group_size);
  // Uniformly random equal partition (a shuffled contiguous one).
  static PartitionSpec random_equal(std::size_t goods, std::size_t group_size,
                                    RngStream& rng);

  std::size_t goods() const { return goods_; }
  std::size_t group_count() const { return groups_.size(); }
  const std::vector<std::size_t>& group(std::size_t g) const { return groups_[g]; }
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }

 private:
  std::vector<std::vector<std::size_t>> groups_;
  std::size_t goods_;
};

}  // namespace rparea

#endif  // RPAREA_PARTITION_H_
