#pragma once

#include <iosfwd>
#include <string>

#include "solslab/nn/adamw.hpp"
#include "solslab/nn/param_store.hpp"

namespace solslab::nn {

// Checkpoint layout: one JSON header line (names, shapes, optimizer
// hyperparameters, format version) terminated by '\n', followed by raw
// little-endian 64-bit float payloads in header order.

void save_param_store(std::ostream& out, const ParamStore& store,
                      const AdamwState* opt = nullptr);
void load_param_store(std::istream& in, ParamStore& store, AdamwState* opt = nullptr);

void save_param_store_file(const std::string& path, const ParamStore& store,
                           const AdamwState* opt = nullptr);
void load_param_store_file(const std::string& path, ParamStore& store,
                           AdamwState* opt = nullptr);

}  // namespace solslab::nn
