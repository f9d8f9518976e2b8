#include <benchmark/benchmark.h>

#include <memory>
#include <stdexcept>
#include <string>

#include "sfx/cohomology.hpp"
#include "sfx/doubleext.hpp"
#include "sfx/io.hpp"
#include "sfx/symplectic.hpp"

namespace {

using namespace sfx;

ExtensionData data(const std::string& name) {
    const CorpusEntry* e = find_corpus(name);
    if (!e) throw std::out_of_range(name);
    return make_extension(read_extension_document(e->text, make_loader(".")).input);
}

const char* const kNames[] = {"c3a-amended.ext", "c112a-amended.ext", "2a11.ext"};

void BM_CheckConditions(benchmark::State& st) {
    const auto ext = data(kNames[st.range(0)]);
    for (auto _ : st) benchmark::DoNotOptimize(check_conditions(ext));
    st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_CheckConditions)->DenseRange(0, 2);

void BM_Build(benchmark::State& st) {
    const auto ext = data(kNames[st.range(0)]);
    for (auto _ : st) benchmark::DoNotOptimize(build(ext));
    st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_Build)->DenseRange(0, 2);

void BM_ValidateModel(benchmark::State& st) {
    const auto m = build(data(kNames[st.range(0)]));
    for (auto _ : st) benchmark::DoNotOptimize(validate(m.qf));
    st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_ValidateModel)->DenseRange(0, 2);

// d of the form viewed as a trivial 2-cochain on the built model
void BM_DceOfForm(benchmark::State& st) {
    const auto m = build(data(kNames[st.range(0)]));
    auto alg = std::make_shared<const LieSuperAlgebra>(m.qf.algebra);
    const Matrix g = m.qf.form.gram();
    SuperSpace k({"k"}, {});
    const Parity p = m.qf.form.parity();
    auto c = Cochain::from_function(alg, k, 2, p, [&](const Tuple& t) { return Vector{g(t[0], t[1])}; });
    for (auto _ : st) benchmark::DoNotOptimize(d_ce(c, Coefficients::Trivial));
    st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_DceOfForm)->DenseRange(0, 2);

void BM_Extract(benchmark::State& st) {
    const auto q = quadruple_of(build(data(kNames[st.range(0)])));
    for (auto _ : st) benchmark::DoNotOptimize(extract_standard(q));
    st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_Extract)->DenseRange(0, 2);

void BM_Tau(benchmark::State& st) {
    const auto ext = data(kNames[st.range(0)]);
    TauMap tau{Matrix(ext.dim_a(), ext.dim_l())};
    // one even entry suffices to exercise every correction term
    [&] {
        for (std::size_t i = 0; i < ext.dim_a(); ++i)
            for (std::size_t m = 0; m < ext.dim_l(); ++m)
                if (ext.a->space().parity(i) == ext.l->space().parity(m)) {
                    tau.tau(i, m) = 1;
                    return;
                }
    }();
    for (auto _ : st) benchmark::DoNotOptimize(tau_transform(ext, tau));
    st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_Tau)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
