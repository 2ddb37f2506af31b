#include "ged/cost_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace ged {

CostModel make_constant_model(const ConstantCosts& k) {
    if (std::min({k.cvs, k.cvd, k.cvi, k.ces, k.ced, k.cei}) < 0.0)
        throw std::invalid_argument("edit costs must be non-negative");
    CostModel m;
    m.node_sub = [cvs = k.cvs](const Label& a, const Label& b) { return a == b ? 0.0 : cvs; };
    m.node_del = [cvd = k.cvd](const Label&) { return cvd; };
    m.node_ins = [cvi = k.cvi](const Label&) { return cvi; };
    m.edge_sub = [ces = k.ces](const Label& a, const Label& b) { return a == b ? 0.0 : ces; };
    m.edge_del = [ced = k.ced](const Label&) { return ced; };
    m.edge_ins = [cei = k.cei](const Label&) { return cei; };
    return m;
}

CostModel clamp_substitutions(const CostModel& m) {
    CostModel out = m;
    out.node_sub = [sub = m.node_sub, del = m.node_del, ins = m.node_ins](const Label& a,
                                                                          const Label& b) {
        return std::min(sub(a, b), del(a) + ins(b));
    };
    out.edge_sub = [sub = m.edge_sub, del = m.edge_del, ins = m.edge_ins](const Label& a,
                                                                          const Label& b) {
        return std::min(sub(a, b), del(a) + ins(b));
    };
    return out;
}

namespace {

void check_cardinals(const PathCardinals& c) {
    bool ok = c.v1_hat >= 0 && c.v1_hat <= c.v1 && c.e1_hat >= 0 && c.e1_hat <= c.e1 &&
              c.v2_hat >= 0 && c.v2_hat <= c.v2 && c.e2_hat >= 0 && c.e2_hat <= c.e2 &&
              c.vf >= 0 && c.vf <= c.v1_hat && c.ef >= 0 && c.ef <= c.e1_hat &&
              c.v1_hat == c.v2_hat && c.e1_hat == c.e2_hat;
    if (!ok) throw std::invalid_argument("inconsistent path cardinals");
}

}  // namespace

double path_cost_constant(const PathCardinals& c, const ConstantCosts& k) {
    check_cardinals(c);
    return (c.v1 - c.v1_hat) * k.cvd + (c.e1 - c.e1_hat) * k.ced + c.vf * k.cvs + c.ef * k.ces +
           (c.v2 - c.v2_hat) * k.cvi + (c.e2 - c.e2_hat) * k.cei;
}

double merit_constant(const PathCardinals& c, const ConstantCosts& k) {
    check_cardinals(c);
    return c.v1_hat * (k.cvd + k.cvi) + c.e1_hat * (k.ced + k.cei) - c.vf * k.cvs - c.ef * k.ces;
}

}  // namespace ged
