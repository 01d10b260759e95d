"""Published reference values used by ``curvifit verify`` and the test suite.

Eccentric-annulus tables are indexed ``[eta_row, xi_col]`` with
``ETA_DEG = 0, 30, ..., 180`` and ``XI = 2, 3, 4, 5, 6`` (a=2, R=6, c_I=2,
I=4, J=6, M=6). Each entry holds the published numerical value of the fitted
inverse mapping and the closed-form value.
"""

import numpy as np

ETA_DEG = np.array([0.0, 30.0, 60.0, 90.0, 120.0, 150.0, 180.0])
XI = np.array([2.0, 3.0, 4.0, 5.0, 6.0])

# Two tables are captioned with the wrong derivative; their exact columns
# (identically zero) identify them as x_xixi and y_xixi.
ECCENTRIC_TABLES = {
    "x": (
        [  # num
            [2.0, 3.5, 5.0, 6.5, 8.0],
            [1.732051, 3.098076, 4.464102, 5.830127, 7.196152],
            [1.0, 2.0, 3.0, 4.0, 5.0],
            [0.0, 0.5, 1.0, 1.5, 2.0],
            [-1.0, -1.0, -1.0, -1.0, -1.0],
            [-1.73205, -2.09808, -2.4641, -2.83013, -3.19615],
            [-2.0, -2.5, -3.0, -3.5, -4.0],
        ],
        [  # exact
            [2.0, 3.5, 5.0, 6.5, 8.0],
            [1.732051, 3.098076, 4.464102, 5.830127, 7.196152],
            [1.0, 2.0, 3.0, 4.0, 5.0],
            [0.0, 0.5, 1.0, 1.5, 2.0],
            [-1.0, -1.0, -1.0, -1.0, -1.0],
            [-1.73205, -2.09808, -2.4641, -2.83013, -3.19615],
            [-2.0, -2.5, -3.0, -3.5, -4.0],
        ],
    ),
    "x_xi": (
        [  # num
            [1.497979, 1.500931, 1.499095, 1.501783, 1.491166],
            [1.365369, 1.366615, 1.365348, 1.367467, 1.358556],
            [1.000708, 1.000249, 0.99955, 1.0011, 0.993895],
            [0.502072, 0.499908, 0.499778, 0.500759, 0.49526],
            [0.003437, -0.00043, 5e-06, 0.000418, -0.00338],
            [-0.36122, -0.3668, -0.36579, -0.36595, -0.36804],
            [-0.49383, -0.50112, -0.49954, -0.50026, -0.50065],
        ],
        [  # exact
            [1.5, 1.5, 1.5, 1.5, 1.5],
            [1.366025, 1.366025, 1.366025, 1.366025, 1.366025],
            [1.0, 1.0, 1.0, 1.0, 1.0],
            [0.5, 0.5, 0.5, 0.5, 0.5],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [-0.36603, -0.36603, -0.36603, -0.36603, -0.36603],
            [-0.5, -0.5, -0.5, -0.5, -0.5],
        ],
    ),
    "x_eta": (
        [  # num
            [-0.00539, -0.00809, -0.01078, -0.01348, -0.01617],
            [-0.99908, -1.49863, -1.99817, -2.49771, -2.99725],
            [-1.73242, -2.59863, -3.46484, -4.33105, -5.19726],
            [-1.99972, -2.99958, -3.99944, -4.9993, -5.99916],
            [-1.73242, -2.59863, -3.46484, -4.33105, -5.19726],
            [-0.99908, -1.49863, -1.99817, -2.49771, -2.99725],
            [-0.00539, -0.00809, -0.01078, -0.01348, -0.01617],
        ],
        [  # exact
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [-1.0, -1.5, -2.0, -2.5, -3.0],
            [-1.73205, -2.59808, -3.4641, -4.33013, -5.19615],
            [-2.0, -3.0, -4.0, -5.0, -6.0],
            [-1.73205, -2.59808, -3.4641, -4.33013, -5.19615],
            [-1.0, -1.5, -2.0, -2.5, -3.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
    ),
    "x_xixi": (
        [  # num
            [0.005016, -0.0007, -0.00057, 0.003823, -0.04021],
            [-0.00067, -0.00013, -0.00057, 0.003254, -0.03453],
            [-0.00636, 0.000437, -0.00057, 0.002686, -0.02884],
            [-0.01204, 0.001005, -0.00057, 0.002117, -0.02316],
            [-0.01773, 0.001574, -0.00057, 0.001548, -0.01747],
            [-0.02341, 0.002143, -0.00057, 0.00098, -0.01179],
            [-0.0291, 0.002711, -0.00057, 0.000411, -0.0061],
        ],
        [  # exact
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
    ),
    "x_xieta": (
        [  # num
            [-8.9e-05, -0.00335, -0.00226, -0.00335, -8.9e-05],
            [-0.49694, -0.50019, -0.49911, -0.50019, -0.49694],
            [-0.86361, -0.86686, -0.86578, -0.86686, -0.86361],
            [-0.99725, -1.00051, -0.99943, -1.00051, -0.99725],
            [-0.86361, -0.86686, -0.86578, -0.86686, -0.86361],
            [-0.49694, -0.50019, -0.49911, -0.50019, -0.49694],
            [-8.9e-05, -0.00335, -0.00226, -0.00335, -8.9e-05],
        ],
        [  # exact
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [-0.5, -0.5, -0.5, -0.5, -0.5],
            [-0.86603, -0.86603, -0.86603, -0.86603, -0.86603],
            [-1.0, -1.0, -1.0, -1.0, -1.0],
            [-0.86603, -0.86603, -0.86603, -0.86603, -0.86603],
            [-0.5, -0.5, -0.5, -0.5, -0.5],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
    ),
    "x_etaeta": (
        [  # num
            [-1.95002, -2.92503, -3.90005, -4.87506, -5.85007],
            [-1.73649, -2.60473, -3.47297, -4.34122, -5.20946],
            [-0.99919, -1.49878, -1.99837, -2.49796, -2.99756],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.999185, 1.498778, 1.99837, 2.497963, 2.997555],
            [1.736487, 2.60473, 3.472974, 4.341217, 5.209461],
            [1.950022, 2.925033, 3.900045, 4.875056, 5.850067],
        ],
        [  # exact
            [-2.0, -3.0, -4.0, -5.0, -6.0],
            [-1.73205, -2.59808, -3.4641, -4.33013, -5.19615],
            [-1.0, -1.5, -2.0, -2.5, -3.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [1.0, 1.5, 2.0, 2.5, 3.0],
            [1.732051, 2.598076, 3.464102, 4.330127, 5.196152],
            [2.0, 3.0, 4.0, 5.0, 6.0],
        ],
    ),
    "y": (
        [  # num
            [-4.2e-05, -2.1e-05, 0.0, 2.1e-05, 4.2e-05],
            [1.00025, 1.500125, 2.0, 2.499875, 2.99975],
            [1.731426, 2.597764, 3.464102, 4.330439, 5.196777],
            [2.000833, 3.000416, 4.0, 4.999584, 5.999167],
            [1.731426, 2.597764, 3.464102, 4.330439, 5.196777],
            [1.00025, 1.500125, 2.0, 2.499875, 2.99975],
            [-4.2e-05, -2.1e-05, 0.0, 2.1e-05, 4.2e-05],
        ],
        [  # exact
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [1.0, 1.5, 2.0, 2.5, 3.0],
            [1.732051, 2.598076, 3.464102, 4.330127, 5.196152],
            [2.0, 3.0, 4.0, 5.0, 6.0],
            [1.732051, 2.598076, 3.464102, 4.330127, 5.196152],
            [1.0, 1.5, 2.0, 2.5, 3.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
    ),
    "y_xi": (
        [  # num
            [-0.17369, 0.04846, -0.03561, 0.05848, -0.25385],
            [0.341767, 0.544412, 0.466844, 0.554432, 0.261607],
            [0.723836, 0.906973, 0.835908, 0.916993, 0.643677],
            [0.872689, 1.036317, 0.971755, 1.046337, 0.792529],
            [0.75505, 0.89917, 0.84111, 0.90919, 0.67489],
            [0.404194, 0.528805, 0.477248, 0.538825, 0.324034],
            [-0.08005, 0.025049, -0.02001, 0.035069, -0.16021],
        ],
        [  # exact
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.5, 0.5, 0.5, 0.5, 0.5],
            [0.866025, 0.866025, 0.866025, 0.866025, 0.866025],
            [1.0, 1.0, 1.0, 1.0, 1.0],
            [0.866025, 0.866025, 0.866025, 0.866025, 0.866025],
            [0.5, 0.5, 0.5, 0.5, 0.5],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
    ),
    "y_eta": (
        [  # num
            [2.028745, 3.01545, 4.002155, 4.98886, 5.975565],
            [1.724581, 2.59422, 3.463858, 4.333497, 5.203136],
            [1.003309, 1.501679, 2.000049, 2.498419, 2.996789],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [-1.00331, -1.50168, -2.00005, -2.49842, -2.99679],
            [-1.72458, -2.59422, -3.46386, -4.3335, -5.20314],
            [-2.02875, -3.01545, -4.00216, -4.98886, -5.97557],
        ],
        [  # exact
            [2.0, 3.0, 4.0, 5.0, 6.0],
            [1.732051, 2.598076, 3.464102, 4.330127, 5.196152],
            [1.0, 1.5, 2.0, 2.5, 3.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [-1.0, -1.5, -2.0, -2.5, -3.0],
            [-1.73205, -2.59808, -3.4641, -4.33013, -5.19615],
            [-2.0, -3.0, -4.0, -5.0, -6.0],
        ],
    ),
    "y_xixi": (
        [  # num
            [0.683732, -0.07071, -0.00668, 0.107451, -1.09789],
            [0.618704, -0.06421, -0.00668, 0.100948, -1.03286],
            [0.553675, -0.05771, -0.00668, 0.094445, -0.96784],
            [0.488647, -0.0512, -0.00668, 0.087943, -0.90281],
            [0.423618, -0.0447, -0.00668, 0.08144, -0.83778],
            [0.35859, -0.0382, -0.00668, 0.074937, -0.77275],
            [0.293561, -0.03169, -0.00668, 0.068434, -0.70772],
        ],
        [  # exact
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
    ),
    "y_xieta": (
        [  # num
            [1.016512, 0.979253, 0.991673, 0.979253, 1.016512],
            [0.899446, 0.862187, 0.874607, 0.862187, 0.899446],
            [0.528177, 0.490918, 0.503338, 0.490918, 0.528177],
            [0.029807, -0.00745, 0.004968, -0.00745, 0.029807],
            [-0.46856, -0.50582, -0.4934, -0.50582, -0.46856],
            [-0.83983, -0.87709, -0.86467, -0.87709, -0.83983],
            [-0.9569, -0.99416, -0.98174, -0.99416, -0.9569],
        ],
        [  # exact
            [1.0, 1.0, 1.0, 1.0, 1.0],
            [0.866025, 0.866025, 0.866025, 0.866025, 0.866025],
            [0.5, 0.5, 0.5, 0.5, 0.5],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [-0.5, -0.5, -0.5, -0.5, -0.5],
            [-0.86603, -0.86603, -0.86603, -0.86603, -0.86603],
            [-1.0, -1.0, -1.0, -1.0, -1.0],
        ],
    ),
    "y_etaeta": (
        [  # num
            [-0.22292, -0.12284, -0.02276, 0.07732, 0.177401],
            [-0.98479, -1.49157, -1.99836, -2.50514, -3.01192],
            [-1.72259, -2.5935, -3.4644, -4.3353, -5.2062],
            [-2.01531, -3.00759, -3.99986, -4.99213, -5.98441],
            [-1.72259, -2.5935, -3.4644, -4.3353, -5.2062],
            [-0.98479, -1.49157, -1.99836, -2.50514, -3.01192],
            [-0.22292, -0.12284, -0.02276, 0.07732, 0.177401],
        ],
        [  # exact
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [-1.0, -1.5, -2.0, -2.5, -3.0],
            [-1.73205, -2.59808, -3.4641, -4.33013, -5.19615],
            [-2.0, -3.0, -4.0, -5.0, -6.0],
            [-1.73205, -2.59808, -3.4641, -4.33013, -5.19615],
            [-1.0, -1.5, -2.0, -2.5, -3.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
    ),

}
ECCENTRIC_TABLES = {
    name: {"num": np.array(num), "exact": np.array(exact)}
    for name, (num, exact) in ECCENTRIC_TABLES.items()
}

# Concentric potential (a=2, R=6, I=4, J=6, M=6, phi_a=0, phi_R=1):
# rows xi = 2..6, columns eta = 0..180 deg, then the exact value per row.
CONCENTRIC_PHI = np.array([
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.375004, 0.375004, 0.376727, 0.376666, 0.374204, 0.371361, 0.371361],
    [0.630386, 0.630386, 0.629934, 0.629739, 0.629603, 0.62986, 0.62986],
    [0.829118, 0.829118, 0.826957, 0.826588, 0.82811, 0.830754, 0.830754],
    [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
])
CONCENTRIC_EXACT = np.array([0.0, 0.36907, 0.63093, 0.834044, 1.0])

# Cartesian example, M=3, canonical (m, n) order.
TABLE1_FORWARD = {
    "xi": [0.012661, 0.042116, -0.02541, 0.016011, 0.006537, -0.00659,
           -0.00094, -0.00047, 0.001222, -0.00012],
    "eta": [-0.35625, 0.070531, 0.122901, -0.00651, -0.01321, 0.018831,
            0.000247, 0.000597, -0.00017, -0.00094],
}
TABLE1_INVERSE = {
    "x": [0.981, 9.122476, 2.196286, -3.16571, -3.39543, -0.35429,
          2.026667, 0.16, 0.251429, 0.16],
    "y": [1.988714, -1.44229, 6.027714, 0.8, 3.998857, -2.75429,
          -0.32, -0.38857, -1.71429, 1.76],
}
