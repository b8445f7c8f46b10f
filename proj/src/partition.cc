#include "rparea/partition.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "rparea/errors.h"

namespace rparea {

PartitionSpec::PartitionSpec(std::vector<std::vector<std::size_t>> groups,
                             std::size_t goods)
    : groups_(std::move(groups)), goods_(goods) {
  std::vector<bool> seen(goods, false);
  std::size_t covered = 0;
  for (const auto& group : groups_) {
    if (group.empty()) throw DomainError("partition contains an empty group");
    for (std::size_t k : group) {
      if (k >= goods) {
        throw DomainError("partition names good " + std::to_string(k + 1) +
                          " beyond K = " + std::to_string(goods));
      }
      if (seen[k]) {
        throw DomainError("good " + std::to_string(k + 1) + " appears in two groups");
      }
      seen[k] = true;
      ++covered;
    }
  }
  if (covered != goods) throw DomainError("partition does not cover every good");
}

PartitionSpec PartitionSpec::whole(std::size_t goods) {
  std::vector<std::size_t> all(goods);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return PartitionSpec({std::move(all)}, goods);
}

PartitionSpec PartitionSpec::contiguous(std::size_t goods, std::size_t group_size) {
  if (group_size == 0 || goods % group_size != 0) {
    throw DomainError("group size must divide the number of goods");
  }
  std::vector<std::vector<std::size_t>> groups(goods / group_size);
  for (std::size_t k = 0; k < goods; ++k) groups[k / group_size].push_back(k);
  return PartitionSpec(std::move(groups), goods);
}

PartitionSpec PartitionSpec::random_equal(std::size_t goods, std::size_t group_size,
                                          RngStream& rng) {
  if (group_size == 0 || goods % group_size != 0) {
    throw DomainError("group size must divide the number of goods");
  }
  std::vector<std::size_t> order(goods);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Fisher-Yates; std::shuffle's draw pattern is library-specific.
  for (std::size_t i = goods; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
    std::swap(order[i - 1], order[std::min(j, i - 1)]);
  }
  std::vector<std::vector<std::size_t>> groups(goods / group_size);
  for (std::size_t p = 0; p < goods; ++p) groups[p / group_size].push_back(order[p]);
  return PartitionSpec(std::move(groups), goods);
}

}  // namespace rparea
