// Copyright 2026 The bidual authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bidual/block_partition.hpp"

#include <stdexcept>

namespace bidual {

BlockPartition::BlockPartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) {
    throw std::invalid_argument("BlockPartition: need at least one block");
  }
  begins_.reserve(sizes_.size());
  for (int d : sizes_) {
    if (d < 1) {
      throw std::invalid_argument("BlockPartition: block sizes must be >= 1");
    }
    begins_.push_back(total_);
    total_ += d;
  }
  entry_block_.resize(total_);
  for (int k = 0; k < num_blocks(); ++k) {
    for (int i = begins_[k]; i < begins_[k] + sizes_[k]; ++i) {
      entry_block_[i] = k;
    }
  }
}

BlockPartition BlockPartition::singletons(int n) {
  return BlockPartition(std::vector<int>(static_cast<size_t>(n), 1));
}

BlockPartition BlockPartition::single_block(int n) {
  return BlockPartition(std::vector<int>{n});
}

}  // namespace bidual
