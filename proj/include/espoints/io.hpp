#ifndef ESPOINTS_IO_HPP
#define ESPOINTS_IO_HPP

#include <stdexcept>
#include <string>

#include "espoints/geometry.hpp"
#include "espoints/oracle.hpp"

namespace espoints {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Text point-set format:
///   #espoints v1
///   # id: <label>            (optional; other # lines are ignored)
///   <N>
///   <x> <y>                  (N lines, signed decimal, any length)
std::string serialize_pointset(const PointSet& s, const std::string& metadata = "");
PointSet parse_pointset(const std::string& text);

PointSet load_pointset(const std::string& path);
void save_pointset(const PointSet& s, const std::string& path,
                   const std::string& metadata = "");

/// FNV-1a 64 over the canonical point content (count and coordinates only,
/// not the id or comments), rendered as "fnv1a64:<16 hex digits>".
std::string content_hash(const PointSet& s);

/// Self-contained witness record: enough to re-verify against the point
/// file alone. Serialized as JSON.
struct WitnessRecord {
    int schema_version = 1;
    std::string pointset_id;
    std::string pointset_hash;
    long long pointset_size = 0;
    ConvexWitness witness;
    std::string params;  // compact JSON string, may be empty
};

WitnessRecord make_witness_record(const PointSet& s, const ConvexWitness& w,
                                  std::string params_json = "");
std::string serialize_witness(const WitnessRecord& rec);
WitnessRecord parse_witness(const std::string& text);
WitnessRecord load_witness(const std::string& path);
void save_witness(const WitnessRecord& rec, const std::string& path);

/// Hash match plus the full verify_witness re-check; ignores the trace.
bool verify_witness_record(const PointSet& s, const WitnessRecord& rec);

}  // namespace espoints

#endif
