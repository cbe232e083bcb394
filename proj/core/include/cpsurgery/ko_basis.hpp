#pragma once

#include "cpsurgery/rational.hpp"
#include "cpsurgery/series.hpp"

#include <string>
#include <vector>

namespace cpsurgery {

struct RankBundle {
    int t_prime = 0;  // rank of KO~^{-k}(CP^n) free part for even k
    int t = 0;        // free rank of the structure set of CP^n x D^k
    int eps = 0;      // 1 iff k = 0 mod 4
    int r_l = 0;      // number of unknowns in the kernel system, l = k/2
};

RankBundle ranks(int n, int k);

// t'_{n,2l}; zero for odd k.
int t_prime(int n, int k);

enum class Special { none, sigma, tau, sphere };

struct BasisDescriptor {
    int bott_power = 0;  // power s of g_R
    int mu_index = 0;    // 0..3
    int mu0_power = 0;
    Special special = Special::none;
    Rational half_factor = 1;

    std::string display() const;
    friend bool operator==(const BasisDescriptor&, const BasisDescriptor&) = default;
};

// Top basis element is sigma or tau: (l,n) = (1,3) or (3,1) mod 4.
bool has_half_top(int n, int l);
// Top element of KO~^{-2l}(CP^n) has order two: (l,n) = (0,1) or (2,3) mod 4.
bool has_torsion_top(int n, int l);

std::vector<BasisDescriptor> basis_descriptors(int n, int l, bool include_sphere = false);

// Free coordinates against basis_descriptors(n, l, with_sphere).
struct KOElement {
    int n = 0;
    int l = 0;
    bool with_sphere = false;
    IntVector coords;

    static KOElement zero(int n, int l, bool with_sphere = false);
    static KOElement unit(int n, int l, int index, bool with_sphere = false);

    KOElement& operator+=(const KOElement& o);
    KOElement& operator*=(const Integer& k);
    friend bool operator==(const KOElement&, const KOElement&) = default;
};

KOElement operator+(KOElement a, const KOElement& b);
KOElement operator*(const Integer& k, KOElement a);

// ph of a single descriptor; offset 2l.
TruncatedSeries descriptor_character(const BasisDescriptor& d, int n, int l, int order);

// Pontryagin character; requires order >= 2(n+l).
TruncatedSeries pontryagin_character(const KOElement& e, int order);
TruncatedSeries pontryagin_character(const KOElement& e);

// Image under the restriction along CP^m -> CP^n. Coordinates are copied,
// except that the sigma/tau coordinate of the target receives twice the
// coefficient of mu mu0^t, since 2 sigma = mu_1 mu_0^t.
KOElement restrict_element(const KOElement& e, int m);

// "504·g·μ0 + 398·g·μ0^2"
std::string display_element(const KOElement& e);

}  // namespace cpsurgery
