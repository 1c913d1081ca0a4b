#pragma once

#include "dga.hpp"

#include <json.hpp>

namespace dgc {

using Json = nlohmann::ordered_json;

/* DGA interchange: ring, basis (name, degree), differential triples, product
   triples, optional cup-one triples, unit and augmentation values.  Elements
   are referenced by (degree, name); coefficients travel as decimal strings so
   nothing is ever rounded.  write-then-read is the identity. */
Json dga_to_json(const DGAlgebra& a);
DGAlgebra dga_from_json(const Json& j);

Json betti_to_json(const BettiTable& t);
std::string betti_to_csv(const BettiTable& t);

/* Result cache keyed by the full serialized job identity; the stored file
   carries the complete key, so a hash collision degrades to a miss instead
   of a wrong answer. */
class Cache {
  public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {}
    bool enabled() const { return !dir_.empty(); }
    std::optional<Json> lookup(const std::string& key) const;
    void store(const std::string& key, const Json& value) const;

  private:
    std::string dir_;
    std::string path_for(const std::string& key) const;
};

std::uint64_t fnv1a64(const std::string& s);

}  // namespace dgc
