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

#ifndef BIDUAL_BLOCK_PARTITION_HPP
#define BIDUAL_BLOCK_PARTITION_HPP

#include <vector>

namespace bidual {

// Contiguous partition of the index range [0, n) into K blocks of sizes
// d_1..d_K. Immutable after construction; invalid sizes throw at construction,
// so a live BlockPartition always satisfies d_k >= 1 and K >= 1.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<int> sizes);

  // n singleton blocks (entry-wise sparsity structure).
  static BlockPartition singletons(int n);
  // One block spanning all n entries.
  static BlockPartition single_block(int n);

  int num_blocks() const { return static_cast<int>(sizes_.size()); }
  int total_size() const { return total_; }
  int size_of(int block) const { return sizes_[block]; }
  int begin_of(int block) const { return begins_[block]; }
  // Block containing the given entry index.
  int block_of(int entry) const { return entry_block_[entry]; }
  const std::vector<int>& sizes() const { return sizes_; }

  bool operator==(const BlockPartition& other) const {
    return sizes_ == other.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> begins_;
  std::vector<int> entry_block_;
  int total_ = 0;
};

}  // namespace bidual

#endif  // BIDUAL_BLOCK_PARTITION_HPP
