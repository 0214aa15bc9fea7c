#include "coalg/error.hpp"

namespace coalg {

int exit_category(Errc code) {
  switch (code) {
    case Errc::size_cap_exceeded:
    case Errc::group_too_large:
    case Errc::search_cap_exceeded:
    case Errc::enumeration_cap_exceeded:
    case Errc::oracle_cap_exceeded:
      return 3;
    case Errc::verification_failed:
      return 4;
    default:
      return 2;
  }
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::non_prime: return "NonPrime";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::duplicate_generator: return "DuplicateGenerator";
    case Errc::loop_edge: return "LoopEdge";
    case Errc::invalid_sigma: return "InvalidSigma";
    case Errc::zero_mu: return "ZeroMu";
    case Errc::graph_mismatch: return "GraphMismatch";
    case Errc::not_a_morphism: return "NotAMorphism";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::malformed_image: return "MalformedImage";
    case Errc::not_generating: return "NotGenerating";
    case Errc::identity_generator: return "IdentityGenerator";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::group_too_large: return "GroupTooLarge";
    case Errc::search_cap_exceeded: return "SearchCapExceeded";
    case Errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case Errc::oracle_cap_exceeded: return "OracleCapExceeded";
    case Errc::verification_failed: return "VerificationFailed";
  }
  return "Error";
}

}  // namespace coalg
