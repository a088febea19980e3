#include "nss/mvoracle.hpp"

#include <algorithm>
#include <random>

#include "nss/json_io.hpp"
#include "nss/kernels.hpp"

namespace nss {

GroupWord generic_element(const NssDatum& m) {
    GroupWord w;
    w.n = m.rank();
    w.crystal_word = m.word();
    // Walk the prefixes M_0 = O, M_1, ..., M_{m-1}; letter j uses phi of M_{j-1}.
    NssDatum prefix = NssDatum::zero(m.cartan());
    std::vector<GroupFactor> in_word_order;
    for (std::size_t j = 0; j < w.crystal_word.size(); ++j) {
        const int letter = w.crystal_word[j];
        in_word_order.push_back({letter, prefix.phi_hat(letter) - 1, static_cast<int>(j) + 1});
        prefix = prefix.apply_fhat(letter);
    }
    w.factors.assign(in_word_order.rbegin(), in_word_order.rend());
    return w;
}

std::vector<Rational> random_specialization(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 997);
    std::uniform_int_distribution<long> den(1, 89);
    std::bernoulli_distribution negative(0.5);
    std::vector<Rational> values;
    values.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rational q(negative(rng) ? -num(rng) : num(rng), den(rng));
        q.canonicalize();
        values.push_back(q);
    }
    return values;
}

namespace {

template <CoeffRing C, class MakeCoeff>
FockVector<C> apply_factors(const std::vector<GroupFactor>& factors, FockVector<C> v, int n, int cap,
                            MakeCoeff make_coeff) {
    for (const auto& f : factors) {
        auto p = LaurentPoly<C>::monomial(make_coeff(f.indeterminate), f.exponent);
        v = x_act(v, n, f.residue, p, cap);
    }
    return v;
}

}  // namespace

FockVector<MultiPoly> apply_word_minus(const GroupWord& w, const MayaDiagram& gamma) {
    if (gamma.kind() != Kind::LeftBlack) throw std::invalid_argument("apply_word_minus: expected a left-black diagram");
    return apply_factors<MultiPoly>(w.factors, FockVector<MultiPoly>::basis(gamma), w.n, 1 << 20,
                                    [](int k) { return MultiPoly::variable(k); });
}

FockVector<Rational> apply_word_minus(const GroupWord& w, const MayaDiagram& gamma, const std::vector<Rational>& values) {
    if (gamma.kind() != Kind::LeftBlack) throw std::invalid_argument("apply_word_minus: expected a left-black diagram");
    return apply_factors<Rational>(w.factors, FockVector<Rational>::basis(gamma), w.n, 1 << 20,
                                   [&](int k) { return values.at(static_cast<std::size_t>(k - 1)); });
}

Valuation d_gamma(const GroupWord& w, const MayaDiagram& gamma, const Specialization& spec) {
    if (spec.mode == Specialization::Mode::Symbolic) return vec_val(apply_word_minus(w, gamma));
    return vec_val(apply_word_minus(w, gamma, random_specialization(w.factors.size(), spec.seed)));
}

FockVector<MultiPoly> apply_word_plus(const GroupWord& w, const MayaDiagram& tau, int cap, PlusOrder order) {
    if (tau.kind() != Kind::RightBlack) throw std::invalid_argument("apply_word_plus: expected a right-black diagram");
    std::vector<GroupFactor> factors = w.factors;
    if (order == PlusOrder::Reversed) std::reverse(factors.begin(), factors.end());
    return apply_factors<MultiPoly>(factors, FockVector<MultiPoly>::basis(tau), w.n, cap,
                                    [](int k) { return MultiPoly::variable(k); });
}

Valuation d_tau(const GroupWord& w, const MayaDiagram& tau, int cap, PlusOrder order) {
    return vec_val(apply_word_plus(w, tau, cap, order));
}

CompareReport compare(const NssDatum& m, const std::vector<MayaDiagram>& gammas, const Specialization& spec,
                      Execution exec) {
    CompareReport report;
    report.n = m.rank();
    report.word = m.word();
    const GroupWord w = generic_element(m);
    report.results.resize(gammas.size());
    const long count = static_cast<long>(gammas.size());
    auto one = [&](long k) {
        CompareEntry& r = report.results[static_cast<std::size_t>(k)];
        r.diagram = gammas[static_cast<std::size_t>(k)];
        r.nss_value = m.eval(r.diagram);
        r.oracle_value = d_gamma(w, r.diagram, spec);
        r.ok = r.oracle_value == Valuation(r.nss_value);
    };
    if (exec == Execution::Serial) {
        for (long k = 0; k < count; ++k) one(k);
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::thread_count())
        for (long k = 0; k < count; ++k) one(k);
    }
    for (const auto& r : report.results) report.pass = report.pass && r.ok;
    return report;
}

std::string report_json(const CompareReport& report) {
    nlohmann::ordered_json doc;
    doc["n"] = report.n;
    doc["word"] = report.word;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json j;
        j["diagram"] = maya_to_json(r.diagram);
        j["nss"] = r.nss_value;
        if (r.oracle_value.is_finite())
            j["oracle"] = r.oracle_value.value();
        else
            j["oracle"] = "inf";
        j["ok"] = r.ok;
        results.push_back(std::move(j));
    }
    doc["results"] = std::move(results);
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

}  // namespace nss
