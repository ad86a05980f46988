#pragma once

// The `.kdt` tree file: one line of JSON,
//
//   {"format":"kdt","version":1,"dims":K,"count":N,"root":TREE}
//
// where TREE is null for the empty tree or
//
//   {"axis":A,"point":[c0,...],"left":TREE,"right":TREE}
//
// Keys appear in exactly this order and integers are written in plain
// decimal, so a given tree always serializes to the same bytes.

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>

#include "kdknn/kdtree.hpp"

namespace kdknn {

struct TreeFile {
  std::size_t dims = 0;
  KdTree tree;
};

std::string serialize_kdt(std::size_t dims, const KdTree& tree);
void write_kdt(std::ostream& out, std::size_t dims, const KdTree& tree);

/// Parses and validates a tree file. Rejects malformed JSON, wrong header
/// fields, a count that disagrees with the node count, axes or points that
/// do not match `dims`, and trees that violate the split ordering. Throws
/// InputError.
TreeFile parse_kdt(const std::string& text);
TreeFile read_kdt(std::istream& in);

}  // namespace kdknn
