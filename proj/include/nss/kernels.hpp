#pragma once

#include <span>
#include <vector>

#include "nss/nss.hpp"

// Fingerprint table fill. Given the parent's values on a DiagramIndex, the
// child datum f_i(parent) on diagram j is
//   min over raising subsets mu of diagram j: parent[pos(mu)] + |moved| * exponent.
// Every mu has fewer boxes and the same charge, so it is in the index.
// Entries are independent, which makes the loop data-parallel.
namespace nss::kernels {

void fill_table_serial(const DiagramIndex& index, int residue, int exponent, std::span<const int> parent_values,
                       std::span<int> out);

void fill_table_omp(const DiagramIndex& index, int residue, int exponent, std::span<const int> parent_values,
                    std::span<int> out);

std::vector<int> fingerprint_table_serial(const NssDatum& m, const DiagramIndex& index);
std::vector<int> fingerprint_table_parallel(const NssDatum& m, const DiagramIndex& index);

/// Worker count used by the OpenMP kernels; 0 restores the runtime default.
void set_thread_count(int threads);
int thread_count();

}  // namespace nss::kernels
