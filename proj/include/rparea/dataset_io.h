#ifndef RPAREA_DATASET_IO_H_
#define RPAREA_DATASET_IO_H_

#include <iosfwd>
#include <string>

#include "rparea/dataset.h"

namespace rparea {

// Long-form CSV, header `obs,good,r,w`, one row per (observation, good)
// with 1-based indices. Every cell must appear exactly once. Throws
// InputError (with the offending line) on malformed input and DomainError
// when the values break a Dataset invariant.
Dataset read_dataset_csv(std::istream& in);

// {"T": ..., "K": ..., "r": [[...]], "w": [[...]]}
Dataset read_dataset_json(std::istream& in);

// Sniffs the format from the first non-blank character.
Dataset read_dataset(const std::string& path);

void write_dataset_csv(const Dataset& dataset, std::ostream& out);
void write_dataset_json(const Dataset& dataset, std::ostream& out);

}  // namespace rparea

#endif  // RPAREA_DATASET_IO_H_
