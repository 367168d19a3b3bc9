#pragma once

#include <iosfwd>
#include <string>

#include "nclwe/baselines.hpp"
#include "nclwe/pke_m2t.hpp"

namespace nclwe::io {

// Line-oriented UTF-8 documents: a `key: value` header starting with
// `format:` and `version: 1`, followed by payload sections introduced by
// `name:` on its own line. Matrices are one row per line, group elements as
// `(alpha,k)`, integers decimal. Serialization is deterministic, so
// documents round-trip byte-identically through parse -> serialize.

std::string format_of(std::istream& is);  // peeks the `format:` header value

void serialize(std::ostream& os, const M2tPublicKey& pk);
void serialize(std::ostream& os, const M2tSecretKey& sk);
void serialize(std::ostream& os, const M2tCiphertext& ct, const GroupParams& p);

void serialize(std::ostream& os, const RegevPublicKey& pk);
void serialize(std::ostream& os, const RegevSecretKey& sk);
void serialize(std::ostream& os, const RegevCiphertext& ct, const RegevParams& params);

void serialize(std::ostream& os, const SylowPublicKey& pk);
void serialize(std::ostream& os, const SylowSecretKey& sk);
void serialize(std::ostream& os, const SylowCiphertext& ct, const SylowInstanceParams& params);

// Parsers throw FormatError on malformed input or format-tag mismatch.
M2tPublicKey parse_m2t_public(std::istream& is);
M2tSecretKey parse_m2t_secret(std::istream& is);
M2tCiphertext parse_m2t_ciphertext(std::istream& is, GroupParams* params_out = nullptr);

RegevPublicKey parse_regev_public(std::istream& is);
RegevSecretKey parse_regev_secret(std::istream& is);
RegevCiphertext parse_regev_ciphertext(std::istream& is);

SylowPublicKey parse_sylow_public(std::istream& is);
SylowSecretKey parse_sylow_secret(std::istream& is);
SylowCiphertext parse_sylow_ciphertext(std::istream& is);

GroupElement parse_element(const std::string& token, const GroupParams& p);

}  // namespace nclwe::io
