#ifndef KOSTKA_IO_HPP
#define KOSTKA_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "kostka/characters.hpp"
#include "kostka/limit_kostka.hpp"
#include "kostka/lusztig_shoji.hpp"
#include "kostka/molien.hpp"

namespace kostka {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const GradedPolynomial& p);
nlohmann::json to_json(const Cyclotomic& c);
nlohmann::json to_json(const RationalFunction& f);

nlohmann::json classify_json(long m, long ell);
std::string classify_text(long m, long ell);

nlohmann::json chartable_json(const CharacterTable& t);
std::string chartable_csv(const CharacterTable& t);

nlohmann::json omega_json(const OmegaMatrix& omega, long truncate_degree);

nlohmann::json kostka_json(const KostkaSolution& sol, const std::string& sign,
                           const std::string& method);
nlohmann::json kminus_candidate_json(const KminusCandidate& k);
nlohmann::json crosscheck_json(const CrossCheckVerdict& v, long m, long ell);

nlohmann::json macdonald_json(const Composition& mu, const BlockCharacter& e);

// The printed-table layout: rows and columns ordered as in the shipped
// regression fixtures (descending canonical order for K-, its vee image for
// K+), zero entries left blank.
std::string latex_kminus(const std::vector<MultiPartition>& canonical_index,
                         const std::vector<std::vector<GradedPolynomial>>& entries,
                         const std::string& corner);
std::string latex_kplus(const std::vector<MultiPartition>& canonical_index,
                        const std::vector<std::vector<GradedPolynomial>>& entries,
                        const std::string& corner);

// Deterministic CSV for a polynomial matrix in canonical order.
std::string matrix_csv(const std::vector<MultiPartition>& index,
                       const std::vector<std::vector<GradedPolynomial>>& entries);

} // namespace kostka

#endif
