#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "bvls/boolfn.hpp"

namespace bvls {

// Truth-table file format:
//
//   n=<int>
//   <2^n characters '0'/'1' in index order>   or   hex:<ceil(2^n/4) hex digits>
//
// In the hex form the first digit covers indices 0..3 and its most
// significant bit is index 0. For n = 1 the two unused low bits of the only
// digit must be zero.

enum class TableEncoding { Binary, Hex };

BooleanFunction read_truth_table(std::istream& in);
BooleanFunction read_truth_table_file(const std::string& path);
void write_truth_table(std::ostream& out, const BooleanFunction& f,
                       TableEncoding encoding = TableEncoding::Binary);

}  // namespace bvls
