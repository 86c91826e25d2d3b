#pragma once

#include <string>

#include "gzoo/textio.hpp"

#ifndef GZOO_TEST_CATALOG
#define GZOO_TEST_CATALOG "catalog"
#endif

namespace support {

inline std::string catalog_path(const std::string& name) {
  return std::string(GZOO_TEST_CATALOG) + "/" + name;
}

inline gzoo::PermutationInput catalog_perm(const std::string& name) {
  return gzoo::textio::parse_permutations(gzoo::textio::read_file(catalog_path(name)));
}

inline gzoo::Presentation catalog_grp(const std::string& name) {
  return gzoo::textio::parse_group_file(gzoo::textio::read_file(catalog_path(name))).presentation;
}

inline gzoo::Presentation presentation(const std::string& text) {
  return gzoo::textio::parse_presentation(text);
}

}  // namespace support
