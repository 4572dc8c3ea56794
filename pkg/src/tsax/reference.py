"""Published 1NN error rates for SAX and TSAX (alpha=4, n/m=4, rew=-1, pen=1).

Keyed by UCR dataset name. Sizes are those of the test splits. Use the
values to compare a local run; they are not ground truth for either
neighbour protocol.
"""

from collections import namedtuple

PublishedRow = namedtuple("PublishedRow", "n_series classes length sax_error tsax_error")

PUBLISHED_ERRORS = {
    "Adiac": PublishedRow(391, 37, 176, 0.974, 0.852),
    "ArrowHead": PublishedRow(175, 3, 251, 0.571, 0.309),
    "Beef": PublishedRow(30, 5, 470, 0.667, 0.167),
    "BeetleFly": PublishedRow(20, 2, 512, 0.250, 0.300),
    "BirdChicken": PublishedRow(20, 2, 512, 0.350, 0.500),
    "Car": PublishedRow(60, 4, 577, 0.550, 0.350),
    "CBF": PublishedRow(900, 3, 128, 0.236, 0.579),
    "ChlorineConcentration": PublishedRow(3840, 3, 166, 0.742, 0.495),
    "CinCECGTorso": PublishedRow(1380, 4, 1639, 0.304, 0.223),
    "Coffee": PublishedRow(28, 2, 286, 0.464, 0.250),
    "Computers": PublishedRow(250, 2, 720, 0.564, 0.444),
    "CricketX": PublishedRow(390, 12, 300, 0.513, 0.759),
    "CricketY": PublishedRow(390, 12, 300, 0.531, 0.741),
    "CricketZ": PublishedRow(390, 12, 300, 0.485, 0.769),
    "DiatomSizeReduction": PublishedRow(306, 4, 345, 0.696, 0.160),
    "DistalPhalanxOutlineAgeGroup": PublishedRow(139, 3, 80, 0.717, 0.240),
    "DistalPhalanxOutlineCorrect": PublishedRow(276, 2, 80, 0.412, 0.317),
    "DistalPhalanxTW": PublishedRow(139, 6, 80, 0.722, 0.320),
    "Earthquakes": PublishedRow(139, 2, 512, 0.317, 0.180),
    "ECG200": PublishedRow(100, 2, 96, 0.220, 0.190),
    "ECG5000": PublishedRow(4500, 5, 140, 0.195, 0.077),
    "ECGFiveDays": PublishedRow(861, 2, 136, 0.475, 0.236),
    "ElectricDevices": PublishedRow(7711, 7, 96, 0.879, 0.584),
    "FaceAll": PublishedRow(1690, 14, 131, 0.571, 0.463),
    "FaceFour": PublishedRow(88, 4, 350, 0.205, 0.330),
    "FacesUCR": PublishedRow(2050, 14, 131, 0.476, 0.447),
    "FiftyWords": PublishedRow(455, 50, 270, 0.415, 0.499),
    "Fish": PublishedRow(175, 7, 463, 0.851, 0.280),
    "FordA": PublishedRow(1320, 2, 500, 0.377, 0.332),
    "FordB": PublishedRow(810, 2, 500, 0.451, 0.444),
    "GunPoint": PublishedRow(150, 2, 150, 0.260, 0.167),
    "Ham": PublishedRow(105, 2, 431, 0.486, 0.419),
    "HandOutlines": PublishedRow(370, 2, 2709, 0.283, 0.187),
    "Haptics": PublishedRow(308, 5, 1092, 0.718, 0.640),
    "Herring": PublishedRow(64, 2, 512, 0.406, 0.469),
    "InlineSkate": PublishedRow(550, 7, 1882, 0.800, 0.769),
    "InsectWingbeatSound": PublishedRow(1980, 11, 256, 0.494, 0.480),
    "ItalyPowerDemand": PublishedRow(1029, 2, 24, 0.459, 0.070),
    "LargeKitchenAppliances": PublishedRow(375, 3, 720, 0.643, 0.592),
    "Lightning2": PublishedRow(61, 2, 637, 0.311, 0.492),
    "Lightning7": PublishedRow(73, 7, 319, 0.507, 0.808),
    "Mallat": PublishedRow(2345, 8, 1024, 0.668, 0.309),
    "Meat": PublishedRow(60, 3, 448, 0.667, 0.533),
    "MedicalImages": PublishedRow(760, 10, 99, 0.599, 0.539),
    "MiddlePhalanxOutlineAgeGroup": PublishedRow(154, 3, 80, 0.730, 0.292),
    "MiddlePhalanxOutlineCorrect": PublishedRow(291, 2, 80, 0.647, 0.430),
    "MiddlePhalanxTW": PublishedRow(154, 6, 80, 0.601, 0.431),
    "MoteStrain": PublishedRow(1252, 2, 84, 0.277, 0.165),
    "NonInvasiveFetalECGThorax1": PublishedRow(1965, 42, 750, 0.908, 0.789),
    "NonInvasiveFetalECGThorax2": PublishedRow(1965, 42, 750, 0.871, 0.704),
}
