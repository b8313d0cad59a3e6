#include "gridtau/rng.hpp"

namespace gridtau {

BraidWord random_braid(SuiteRng& rng, int max_strands, int max_letters, int min_letters) {
    BraidWord w;
    w.strands = rng.range(2, max_strands);
    const int c = rng.range(min_letters, max_letters);
    for (int t = 0; t < c; ++t) {
        const int idx = rng.range(1, w.strands - 1);
        w.letters.push_back(rng.coin() ? idx : -idx);
    }
    return w;
}

QuasipositiveWord random_quasipositive(SuiteRng& rng, int max_strands, int max_bands) {
    QuasipositiveWord qp;
    qp.strands = rng.range(2, max_strands);
    const int m = rng.range(1, max_bands);
    for (int k = 0; k < m; ++k) {
        QuasipositiveBand band;
        const int conj_len = rng.range(0, 1);
        for (int j = 0; j < conj_len; ++j) {
            const int idx = rng.range(1, qp.strands - 1);
            band.conjugator.push_back(rng.coin() ? idx : -idx);
        }
        band.generator_index = rng.range(1, qp.strands - 1);
        qp.bands.push_back(std::move(band));
    }
    return qp;
}

}  // namespace gridtau
