#include "nss/kernels.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nss::kernels {

namespace {

int table_entry(const DiagramIndex& index, std::size_t j, int residue, int exponent,
                std::span<const int> parent_values) {
    int best = std::numeric_limits<int>::max();
    for (const auto& [mu, moved] : raising_subsets(index.diagrams[j], index.n, residue)) {
        auto pos = index.find(mu);
        if (!pos) throw std::logic_error("fingerprint: removal left the diagram index");
        best = std::min(best, parent_values[*pos] + moved * exponent);
    }
    return best;
}

void check_sizes(const DiagramIndex& index, std::span<const int> parent_values, std::span<int> out) {
    if (parent_values.size() != index.diagrams.size() || out.size() != index.diagrams.size())
        throw std::invalid_argument("fingerprint: table size mismatch");
}

int g_threads = 0;

template <class Fill>
std::vector<int> table_for_datum(const NssDatum& m, const DiagramIndex& index, Fill fill) {
    std::vector<int> out(index.diagrams.size(), 0);
    auto parent = m.parent();
    if (!parent) return out;
    const std::vector<int> parent_values = parent->fingerprint(index.max_boxes);
    fill(index, m.last_letter(), m.step_exponent(), std::span<const int>(parent_values), std::span<int>(out));
    return out;
}

}  // namespace

void fill_table_serial(const DiagramIndex& index, int residue, int exponent, std::span<const int> parent_values,
                       std::span<int> out) {
    check_sizes(index, parent_values, out);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = table_entry(index, j, residue, exponent, parent_values);
}

void fill_table_omp(const DiagramIndex& index, int residue, int exponent, std::span<const int> parent_values,
                    std::span<int> out) {
    check_sizes(index, parent_values, out);
    const long count = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count())
    for (long j = 0; j < count; ++j)
        out[j] = table_entry(index, static_cast<std::size_t>(j), residue, exponent, parent_values);
}

std::vector<int> fingerprint_table_serial(const NssDatum& m, const DiagramIndex& index) {
    return table_for_datum(m, index, fill_table_serial);
}

std::vector<int> fingerprint_table_parallel(const NssDatum& m, const DiagramIndex& index) {
    return table_for_datum(m, index, fill_table_omp);
}

void set_thread_count(int threads) { g_threads = std::max(0, threads); }

int thread_count() {
#ifdef _OPENMP
    return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace nss::kernels
