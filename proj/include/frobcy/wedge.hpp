#pragma once

#include "frobcy/diffop.hpp"
#include "frobcy/polyrat.hpp"

#include <vector>

namespace frobcy {

using ModuleVector = std::vector<RationalFunction>;

// Q(z)-module with an action of theta = z d/dz given on a basis.
struct DifferentialModule {
    unsigned dimension = 0;
    std::vector<ModuleVector> theta;  // theta[j] = coordinates of theta(e_j)

    ModuleVector apply(const ModuleVector& v) const;
};

// Basis e_i = theta^i omega of D / D*op.
DifferentialModule operator_module(const ThetaOperator& op);
// Basis e_i ^ e_j (i < j) in lexicographic order.
DifferentialModule exterior_square(const DifferentialModule& m);
// Canonical theta-form of the minimal monic relation satisfied by v.
ThetaOperator minimal_relation(const DifferentialModule& m, const ModuleVector& v);

// Annihilator of e_0 ^ e_1 for an operator of any order >= 2.
ThetaOperator exterior_square_operator(const ThetaOperator& op);
// The fifth-order operator Q of a fourth-order MUM operator.
ThetaOperator wedge_square(const ThetaOperator& p_op);

// Coefficients g_0..g_N of y_2 = f_0 log z + g with g_0 = 0.
std::vector<mpq_class> log_solution(const ThetaOperator& op, const std::vector<mpz_class>& f0);
// w = f0^2 + z(f0 g' - f0' g), exact integers.
TruncatedSeries f0_wedge_via_wronskian(const ThetaOperator& p_op, std::size_t N);

// Y with Y'/Y = r, when such a rational function exists.
RationalFunction rational_exp_integral(const RationalFunction& r);

// Perturbations of the horizontal-section formulas, for negative controls.
struct HorizontalOptions {
    bool flip_sign = false;
    bool drop_b1 = false;
};

bool verify_horizontal_u4(const ThetaOperator& p_op, std::size_t N, HorizontalOptions opts = {});
bool verify_horizontal_u5(const ThetaOperator& q_op, std::size_t N, HorizontalOptions opts = {});

}  // namespace frobcy
