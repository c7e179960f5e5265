#pragma once

#include <json.hpp>

#include "loropt/cavity.hpp"
#include "loropt/little_group.hpp"
#include "loropt/multilayer.hpp"
#include "loropt/polarization.hpp"

// JSON interchange used by the CLI.  Matrix encodings, row-major:
//   real 2x2 / 4x4   nested arrays of numbers
//   complex entries  [re, im] pairs, so a complex 2x2 is
//                    [[[re,im],[re,im]],[[re,im],[re,im]]]
//   Jones vector     [[re,im],[re,im]]
//   Stokes vector    [S0, S1, S2, S3]

namespace loropt::jsonio {

using json = nlohmann::ordered_json;

json to_json(const Real2& m);
json to_json(const Complex2& m);
json to_json(const Lorentz4& m);
json to_json(const Complex4& m);
json to_json(const FourVector& v);
json to_json(const StokesVector& s);
json to_json(const JonesVector& v);
json to_json(const CoherencyMatrix& c);
json to_json(const BargmannTriple& t);
json to_json(const LensChain& chain);
json to_json(const CoreFactorization& f);
json to_json(const ContractionReport& r);
json to_json(const CavityReport& r);
json to_json(const PeriodReport& r);
json to_json(const IwasawaWitness& w);

Real2 real2_from_json(const json& j);
/// Accepts both the complex encoding and a plain real matrix.
Complex2 complex2_from_json(const json& j);
JonesVector jones_from_json(const json& j);
StokesVector stokes_from_json(const json& j);

}  // namespace loropt::jsonio
