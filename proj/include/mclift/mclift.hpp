#pragma once

#include <mclift/affine.hpp>
#include <mclift/error.hpp>
#include <mclift/face_path.hpp>
#include <mclift/fixtures.hpp>
#include <mclift/framework.hpp>
#include <mclift/lifting.hpp>
#include <mclift/linalg.hpp>
#include <mclift/rational.hpp>
#include <mclift/surface.hpp>
#include <mclift/surface_io.hpp>
