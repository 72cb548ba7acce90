#include <iostream>
#include <memory>
#include <optional>
#include <vector>

#include "wittsmooth/analysis.hpp"
#include "wittsmooth/gln.hpp"
#include "wittsmooth/modules.hpp"
#include "wittsmooth/rational.hpp"
#include "wittsmooth/weyl.hpp"
#include "wittsmooth/witt.hpp"

// A short tour: brackets, normal ordering, module actions, and the exact
// window analyses. Everything prints with plain to_string renderings.

using namespace wittsmooth;

int main() {
    std::cout << "== brackets of polynomial vector fields ==\n";
    WittElement e = WittElement::basis(MultiIndex({1, 0}), 1);
    WittElement f = WittElement::basis(MultiIndex({0, 1}), 0);
    std::cout << "x = " << e.to_string() << "\n";
    std::cout << "y = " << f.to_string() << "\n";
    std::cout << "[x, y] = " << bracket(e, f).to_string() << "\n\n";

    std::cout << "== normal ordering in the Weyl algebra ==\n";
    WeylElement d1 = WeylElement::d_power(MultiIndex({1}));
    WeylElement t1 = WeylElement::t_power(MultiIndex({1}));
    std::cout << "d1 * t1 = " << weyl_multiply(d1, t1).to_string() << "\n\n";

    std::cout << "== the polynomial module P0 ==\n";
    P0Vector v = P0Vector::monomial(MultiIndex({2, 1}), 1);
    std::cout << "v = " << v.to_string() << "\n";
    ReachOne r = p0_reach_one(v);
    std::cout << "t^" << r.beta.to_string() << " v = " << format_rational(r.c)
              << " * 1bar\n\n";

    std::cout << "== a tensor module over n = 2 ==\n";
    SmoothModule plane = SmoothModule::tensor(exterior_power(2, 1));
    ModuleVector top(2, 2);
    top.add_term(MultiIndex::zero(2), QVector{Rational(0), Rational(1)});
    std::cout << "w = " << top.to_string() << "\n";
    WittElement shear = WittElement::basis(MultiIndex({1, 0}), 1);
    std::cout << "(" << shear.to_string() << ") w = "
              << plane.act(shear, top).to_string() << "\n";
    WittElement deep = WittElement::basis(MultiIndex({2, 1}), 0);
    std::cout << "(" << deep.to_string() << ") w = "
              << plane.act(deep, top).to_string() << "\n\n";

    std::cout << "== window analyses ==\n";
    TruncationWindow win(plane, 3, 4);
    std::optional<int> h = height(win);
    std::cout << "height of the plane tensor module at degree bound 3: "
              << (h ? std::to_string(*h) : "not visible") << "\n";

    SmoothModule scalar = make_w_phi(2, 0);
    TruncationWindow swin(scalar, 4, 5);
    std::vector<ModuleVector> gens;
    for (int i = 0; i < 2; ++i)
        gens.push_back(ModuleVector::monomial(MultiIndex::unit(2, i),
                                              QVector{Rational(1)}));
    std::cout << "graded dimensions of the scalar module modulo its degree one "
                 "generators:";
    for (int d : quotient_graded_dims(swin, gens)) std::cout << " " << d;
    std::cout << "\n";

    WhittakerCharacter phi({1, 1, 1, 1}, {0, 0});
    std::cout << "criterion determinant at the all ones character: "
              << format_rational(aphi_det(phi)) << "\n";
    return 0;
}
