#pragma once

#include <json.hpp>

#include "gpm/codes.hpp"
#include "gpm/critical.hpp"
#include "gpm/laplacian.hpp"
#include "gpm/polymatroid.hpp"
#include "gpm/reptheory.hpp"

namespace gpm {

using Json = nlohmann::ordered_json;

Json rank_table_json(const RankTable& p);
Json log_polynomial_json(const LogPolynomial& f);
Json axiom_report_json(const AxiomReport& r);
Json crapo_rota_json(const CrapoRotaReport& r);
Json dual_crapo_rota_json(const DualCrapoRotaReport& r);
Json spectrum_json(const RSpectrum& s);
Json weight_enumerator_json(const WeightEnumerator& w);
Json greene_json(const GreeneReport& r);
Json macwilliams_json(const MacWilliamsReport& r);
Json laplacian_json(const SpectrumReport& r);
Json complex_dump_json(const QuotientComplex& c);
Json euler_json(const EulerReport& r);
Json top_homology_json(const TopHomologyReport& r);
Json tutte_json(const TuttePoly& t);

}  // namespace gpm
