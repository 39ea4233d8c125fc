#pragma once

// Archimedean constants: completed zeta factors, Whittaker norms, the per-place
// constants C_sigma, their global product C(k, m), the measure-volume table, and the
// archimedean vanishing predicate.

#include "gklocal/scalar.hpp"

#include <optional>
#include <vector>

namespace gk {

enum class PlaceKind { real_split_torus, complex_split_torus, nonsplit };

// One archimedean place of the torus datum.
struct PlaceSpec {
    PlaceKind kind = PlaceKind::real_split_torus;
    int k = 2;             // weight (real split / nonsplit)
    int k_id = 2, k_c = 2;  // weights at the two embeddings (complex split)
    int m = 0;
    int m_id = 0, m_c = 0;
    int lambda_sign = 1;     // real split only
    bool chi_matches = true; // chi_0 = lambda (real split) resp. chi_0 = 1 (complex split)

    static PlaceSpec real_split(int k, int m, int lambda_sign = 1, bool matches = true);
    static PlaceSpec complex_split(int k_id, int k_c, int m_id, int m_c, bool matches = true);
    static PlaceSpec nonsplit_place(int k, int m);

    void validate() const;
};

struct GlobalSpec {
    std::vector<PlaceSpec> places;
};

// zeta_v(s) = pi^{-s/2} Gamma(s/2) for the real kind, 2 (2 pi)^{-s} Gamma(s) for the
// complex kind. Exactness restricts s to positive integers.
enum class ArchKind { real_place, complex_place };
PiScaled zeta_arch(ArchKind kind, int s);

// 2 (4 pi)^{-k} Gamma(k) for a real place; for a complex place with weights (k1, k2):
// 8 (2 pi)^{1-k1-k2} Gamma((k1+k2)/2)^2 Gamma(k1) Gamma(k2) / Gamma(k1+k2).
PiScaled whittaker_norm_real(int k);
PiScaled whittaker_norm_complex(int k1, int k2);

// The per-place constant:
//   nonsplit:       2 Gamma(k/2-m) Gamma(k/2+m) / ((-1)^{m+(k-2)/2} (2 pi)^{k+1})
//   real split:     4 (-1)^m (2 pi)^{-k} Gamma(k/2-m) Gamma(k/2+m), or 0 on mismatch
//   complex split:  (-1)^{m1+m2} 16 (2 pi)^{1-k1-k2} * four Gamma factors, or 0.
// The nonsplit case inlines L(1, eta) zeta(1)^{-1} = pi^{-1}; split cases use 1.
PiScaled c_sigma(const PlaceSpec& p);

// The global archimedean constant: sign (-1)^{sum over nonsplit places of (k-2)/2},
// 4^{#real split} (32 pi)^{#complex split} (1/pi)^{#nonsplit}, times the product over
// embeddings of Gamma(k/2-m) Gamma(k/2+m) / ((-1)^m (2 pi)^k); zero when any split
// place mismatches.
PiScaled c_global(const GlobalSpec& g);

// true iff chi_matches holds at every split place (vacuously true with none).
bool vanishing_predicate(const GlobalSpec& g);

// Measure-volume table. Irrational entries take the square root of the discriminant
// norm as the caller-supplied rational parameter.
enum class VolumeEntry {
    ramified_quaternion_archimedean,  // 2 pi^2
    pgl2_integers,                    // (1 - q^{-2}) * sqrt_d^3
    ramified_quaternion_order,        // (1 - q^{-2}) (q-1)^{-1} * sqrt_d^3
    global_unit_index                 // 1 / sqrt_dD
};
PiScaled volume_table(VolumeEntry entry, const Rat& q = Rat(1), const Rat& sqrt_disc = Rat(1));

}  // namespace gk
