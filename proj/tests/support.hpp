#ifndef CATKIT_TESTS_SUPPORT_HPP
#define CATKIT_TESTS_SUPPORT_HPP

#include "catkit/zoo.hpp"

// The tests draw their fixtures straight from the library zoo.
namespace testsupport {
using namespace catkit::zoo;
using catkit::fincat::CatPtr;
using catkit::fincat::make_cat;
using catkit::Id;
}  // namespace testsupport

#endif
