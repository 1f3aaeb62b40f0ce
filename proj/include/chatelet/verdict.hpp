#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chatelet/brauer.hpp"
#include "chatelet/galois.hpp"
#include "chatelet/local.hpp"
#include "chatelet/surface.hpp"

#include "json.hpp"

namespace chatelet {

enum class WAStatus { Holds, Fails, NoAdelicPoints, Inconclusive };
std::string to_string(WAStatus s);

// One machine-readable step of the reasoning trail.
struct JustificationStep {
    std::string rule;
    std::string inputs;
    std::string outputs;
};

// Weak-approximation verdict with the per-place evidence behind it.
struct WAReport {
    BrauerType brauer;
    std::map<Place, EvImage> local_images;  // Real first, then primes ascending
    WAStatus status = WAStatus::Inconclusive;
    std::vector<Place> witnesses;  // places carrying the obstruction / failure
    std::string reason;            // set when status is Inconclusive or NoAdelicPoints
    std::vector<JustificationStep> justification;
};

// Split-fiber criterion: a split surface fails weak approximation exactly
// when some bad place has a locally a nonsquare, or a < 0 at the real place.
// Throws NotSplit when P does not factor into linear factors over Q.
WAReport wa_split(const ChateletSurface& s);

// For P = c P1 P2 with P1, P2 irreducible monic quadratics and Brauer type
// Z2: the first odd prime p with v_p(a) odd and both quadratics irreducible
// modulo p (and X locally solvable there), where the class (a, P1) obstructs
// weak approximation.  Throws WrongShape when the factorization pattern or
// Brauer type does not match.
std::optional<Integer> wa_two_quadratics_quickcheck(const ChateletSurface& s);

// Full decision pipeline: classification, split criterion, or per-place
// evaluation-map images with the invariant-sum argument.
WAReport wa_decide(const ChateletSurface& s, int depth = 24);

enum class PerpetualClass { PerpetualWA, FailsOverExtension, ReducesToQuadraticCase, Inconclusive };
std::string to_string(PerpetualClass c);

// Whether weak approximation persists over every finite extension, decided
// from the Galois type of the splitting field L of P, whether sqrt(a) lies
// in L, and whether P factors further over Q(sqrt a).
struct PerpetualReport {
    GaloisType galois = GaloisType::C1;
    bool sqrt_a_in_L = false;
    bool factors_over_quad = false;
    PerpetualClass classification = PerpetualClass::Inconclusive;
    std::string detail;  // case citation, reduction target, or unverified hypothesis
};

PerpetualReport perpetual_classify(const ChateletSurface& s);

nlohmann::json report_to_json(const WAReport& r);
nlohmann::json perpetual_to_json(const PerpetualReport& r);
std::string report_to_text(const WAReport& r);
std::string perpetual_to_text(const PerpetualReport& r);

}  // namespace chatelet
