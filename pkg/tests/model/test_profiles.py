import unittest

import numpy as np
from ddt import data, ddt, unpack

from src.errors import ConfigError
from src.model.profile.BandProfile import BandProfile, irwin_hall_density
from src.model.profile.BoxProfile import BoxProfile
from src.model.profile.EpanechnikovProfile import EpanechnikovProfile
from src.model.profile.TriangleProfile import TriangleProfile

PROFILES = (BoxProfile(), TriangleProfile(), EpanechnikovProfile(), BoxProfile(2.0), TriangleProfile(0.5))


@ddt
class TestBandProfile(unittest.TestCase):
    @data((BoxProfile(), 0.0, 0.5), (BoxProfile(), 2.0, 0.0), (TriangleProfile(), 0.5, 0.5), (EpanechnikovProfile(), 0.0, 0.75))
    @unpack
    def test_value(self, profile, x, expected):
        self.assertAlmostEqual(profile.value(x), expected, places=15)

    @data(*PROFILES)
    def test_fourier_at_zero_is_one(self, profile):
        self.assertAlmostEqual(profile.fourier(0.0), 1.0, places=14)

    @data(*PROFILES)
    def test_normalized(self, profile):
        self.assertAlmostEqual(profile.normalization, 1.0, places=10)

    @data(0.3, 1.0, 7.5, 40.0)
    def test_box_fourier(self, k):
        self.assertAlmostEqual(BoxProfile().fourier(k), np.sin(k) / k, places=14)

    @data(0.3, 1.0, 7.5, 40.0)
    def test_triangle_fourier(self, k):
        self.assertAlmostEqual(TriangleProfile().fourier(k), (np.sin(k / 2) / (k / 2)) ** 2, places=14)

    def test_epanechnikov_fourier_is_continuous_at_series_switch(self):
        profile = EpanechnikovProfile()
        below, above = profile.fourier(0.0099999), profile.fourier(0.0100001)
        self.assertAlmostEqual(below, above, places=8)

    @data(*PROFILES)
    def test_fourier_decay_bound(self, profile):
        constant, power = profile.fourier_decay()
        k = np.linspace(1.0, 200.0, 4001)
        self.assertTrue(np.all(np.abs(profile.fourier(k)) <= constant / k**power + 1e-15))

    @data(*PROFILES)
    def test_low_convolution_moments(self, profile):
        self.assertEqual(profile.convolution_moment(1), profile.value_at_zero())
        self.assertEqual(profile.convolution_moment(2), profile.l2_norm_squared())

    @data((BoxProfile(), 0.5), (TriangleProfile(), 2.0 / 3.0), (EpanechnikovProfile(), 0.6))
    @unpack
    def test_l2_norm(self, profile, expected):
        self.assertAlmostEqual(profile.l2_norm_squared(), expected, places=15)

    def test_exact_moments(self):
        # Irwin-Hall densities at the center: f_3(3/2) = 3/4, f_6(3) = 11/20
        self.assertAlmostEqual(BoxProfile().convolution_moment(3), 0.375, places=15)
        self.assertAlmostEqual(TriangleProfile().convolution_moment(3), 0.55, places=15)
        self.assertEqual(float(irwin_hall_density(2, 1)), 1.0)

    @data(3, 4, 6)
    def test_quadrature_moments_match_exact(self, m):
        profile = TriangleProfile()
        self.assertAlmostEqual(profile.fourier_power_integral(m), profile.exact_convolution_moment(m), places=10)

    def test_moments_decrease(self):
        profile = EpanechnikovProfile()
        moments = [profile.convolution_moment(m) for m in range(1, 12)]
        self.assertTrue(all(a > b > 0 for a, b in zip(moments, moments[1:])))

    def test_second_moment(self):
        self.assertAlmostEqual(TriangleProfile().second_moment(), 1.0 / 6.0, places=12)
        self.assertAlmostEqual(BoxProfile().second_moment(), 1.0 / 3.0, places=12)

    @data(*PROFILES)
    def test_dict_round_trip(self, profile):
        self.assertEqual(BandProfile.from_dict(profile.to_dict()), profile)

    @data({"family": "cosine"}, {"family": "box", "width": 1.0}, {"radius": 1.0}, {"family": "box", "radius": -1.0})
    def test_invalid_records(self, record):
        with self.assertRaises(ConfigError):
            BandProfile.from_dict(record)


if __name__ == "__main__":
    unittest.main()
