"""Independent NumPy oracle for frozen kinship and H+ test values."""
import numpy as np

labels = ["Aunt", "Brother", "Daughter", "Father", "Granddaughter", "Grandfather",
          "Grandmother", "Grandson", "Mother", "Nephew", "Niece", "Sister", "Son", "Uncle"]
delta = np.array([
    [0, 79, 59, 73, 57, 77, 55, 79, 51, 56, 32, 58, 80, 27],
    [79, 0, 62, 38, 75, 57, 80, 51, 63, 53, 76, 28, 38, 57],
    [59, 62, 0, 57, 46, 77, 54, 72, 31, 74, 52, 37, 29, 80],
    [73, 38, 57, 0, 79, 51, 70, 54, 29, 59, 81, 63, 32, 51],
    [57, 75, 46, 79, 0, 57, 32, 29, 56, 74, 51, 50, 72, 80],
    [77, 57, 77, 51, 57, 0, 29, 31, 75, 58, 79, 79, 55, 55],
    [55, 80, 54, 70, 32, 29, 0, 57, 50, 79, 58, 57, 78, 77],
    [79, 51, 72, 54, 29, 31, 57, 0, 79, 51, 74, 75, 47, 58],
    [51, 63, 31, 29, 56, 75, 50, 79, 0, 81, 60, 39, 57, 73],
    [56, 53, 74, 59, 74, 58, 79, 51, 81, 0, 27, 76, 52, 33],
    [32, 76, 52, 81, 51, 79, 58, 74, 60, 27, 0, 53, 74, 56],
    [58, 28, 37, 63, 50, 79, 57, 75, 39, 76, 53, 0, 62, 79],
    [80, 38, 29, 32, 72, 55, 78, 47, 57, 52, 74, 62, 0, 59],
    [27, 57, 80, 51, 80, 55, 77, 58, 73, 33, 56, 79, 59, 0]], dtype=float)
gender = np.array([2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 1], dtype=float)
assert (delta == delta.T).all()
n = len(labels)
iu = np.triu_indices(n, 1)
S = delta[iu].sum()
print("upper-triangle sum S =", S)
print("weighted checksum sum_{i<j} (14 i + j) delta_ij =", sum((14 * i + j) * delta[i, j] for i, j in zip(*iu)))
print("w(Aunt,Uncle) sammon =", 1.0 / (27 * S))

# G = V^T H V for gender with uniform weights, by brute force pair sum.
g_pairs = sum((gender[i] - gender[j]) ** 2 for i, j in zip(*iu))
H = n * np.eye(n) - np.ones((n, n))
print("G gender brute force =", g_pairs, "matrix form =", gender @ H @ gender)

for N in (2, 3, 4):
    H = N * np.eye(N) - np.ones((N, N))
    print(f"pinv(H) N={N}:\n", np.linalg.pinv(H))
H2 = np.array([[1.0, -1.0], [-1.0, 1.0]])
print("pinv N=2 w=1:", np.linalg.pinv(H2))
