#include "wirtinger/eval.hpp"

#include <stdexcept>

namespace wirtinger {

Complex eval_value(const Expr& e, Complex c, real pole_floor) {
    const Complex v = evaluate(e, c, ValueAlgebra{pole_floor});
    require_finite(v, "eval_value");
    return v;
}

WirtingerJet eval_first(const Expr& e, Complex c, real pole_floor) {
    const WirtingerJet j = evaluate(e, c, FirstOrderAlgebra{pole_floor});
    require_finite(j.value, "eval_first");
    require_finite(j.dz, "eval_first");
    require_finite(j.dzc, "eval_first");
    return j;
}

SecondOrderJet propagate_second_order(const Expr& e, Complex c, real pole_floor) {
    const SecondOrderJet j = evaluate(e, c, SecondOrderAlgebra{pole_floor});
    for (const Complex slot : {j.value, j.dz, j.dzc, j.dzz, j.dzzc, j.dzcz, j.dzczc}) {
        require_finite(slot, "propagate_second_order");
    }
    return j;
}

JetResult eval_jet(const Expr& e, Complex c, int order, real pole_floor) {
    switch (order) {
    case 0:
        return eval_value(e, c, pole_floor);
    case 1:
        return eval_first(e, c, pole_floor);
    case 2:
        return propagate_second_order(e, c, pole_floor);
    default:
        throw std::invalid_argument("eval_jet: order must be 0, 1 or 2");
    }
}

} // namespace wirtinger
