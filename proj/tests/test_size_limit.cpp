#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "framescope/errors.hpp"
#include "framescope/toeplitz_ops.hpp"

using namespace framescope;

TEST(SizeLimit, EnvironmentCapIsHonoured) { EXPECT_EQ(max_section_size(), 16); }

TEST(SizeLimit, LibraryRejectsOversizedSection) {
  EXPECT_NO_THROW(toeplitz_section(WindowSpec::sign(), 16));
  try {
    toeplitz_section(WindowSpec::sign(), 17);
    FAIL() << "accepted N = 17";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeLimitExceeded);
  }
}

TEST(SizeLimit, CliReportsValidationError) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"spectrum", "--window", "sign", "--N", "17"}, out, err), cli::kExitValidation);
  EXPECT_NE(err.str().find("SizeLimitExceeded"), std::string::npos) << err.str();
  std::ostringstream out2, err2;
  EXPECT_EQ(cli::run({"spectrum", "--window", "sign", "--N", "16"}, out2, err2), cli::kExitOk);
}
