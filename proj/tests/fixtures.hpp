// Throughput fixtures: published per-repetition Gflops/s quadruples with
// their printed mean and sample standard deviation. Used as oracles for the
// statistics and shape-ranking code.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fixtures {

struct OrderRow {
    std::string kernel;
    std::size_t order;
    double rep[4];
    double mean;
    double std;
};

// 3 kernels x 11 matrix orders at local work size (8, 8).
inline const std::vector<OrderRow>& order_sweep() {
    static const std::vector<OrderRow> rows = {
        {"SGEMM_NT_1x1", 64, {2.954, 2.966, 2.957, 2.958}, 2.95875, 0.005123},
        {"SGEMM_NT_1x1", 96, {2.687, 2.709, 2.655, 2.684}, 2.68375, 0.022172},
        {"SGEMM_NT_1x1", 128, {3.086, 2.863, 3.030, 3.071}, 3.01250, 0.102439},
        {"SGEMM_NT_1x1", 192, {2.947, 2.954, 2.962, 2.966}, 2.95725, 0.008461},
        {"SGEMM_NT_1x1", 256, {2.792, 2.765, 2.791, 2.843}, 2.79775, 0.032653},
        {"SGEMM_NT_1x1", 384, {2.846, 2.820, 2.783, 2.819}, 2.81700, 0.025884},
        {"SGEMM_NT_1x1", 512, {2.532, 2.382, 2.474, 2.431}, 2.45475, 0.063757},
        {"SGEMM_NT_1x1", 640, {2.741, 2.788, 2.746, 2.749}, 2.75600, 0.021587},
        {"SGEMM_NT_1x1", 768, {2.769, 2.747, 2.779, 2.758}, 2.76325, 0.013817},
        {"SGEMM_NT_1x1", 896, {2.726, 2.659, 2.732, 2.739}, 2.71400, 0.037050},
        {"SGEMM_NT_1x1", 1024, {2.663, 2.591, 2.614, 2.606}, 2.61850, 0.031161},
        {"SGEMM_NT_4x1", 64, {10.393, 10.207, 10.130, 10.299}, 10.25725, 0.113855},
        {"SGEMM_NT_4x1", 96, {10.726, 10.596, 10.429, 10.494}, 10.56125, 0.129567},
        {"SGEMM_NT_4x1", 128, {12.115, 12.139, 12.141, 12.225}, 12.15500, 0.048139},
        {"SGEMM_NT_4x1", 192, {8.952, 11.737, 11.070, 11.340}, 10.77475, 1.245662},
        {"SGEMM_NT_4x1", 256, {4.038, 4.002, 4.026, 3.363}, 3.85725, 0.329840},
        {"SGEMM_NT_4x1", 384, {10.412, 10.350, 10.373, 10.339}, 10.36850, 0.032275},
        {"SGEMM_NT_4x1", 512, {1.863, 1.821, 1.824, 1.858}, 1.84150, 0.022068},
        {"SGEMM_NT_4x1", 640, {2.932, 10.388, 2.886, 2.886}, 4.77300, 3.743396},
        {"SGEMM_NT_4x1", 768, {1.982, 1.916, 2.818, 1.960}, 2.16900, 0.433536},
        {"SGEMM_NT_4x1", 896, {10.337, 10.336, 1.990, 8.916}, 7.89475, 3.993049},
        {"SGEMM_NT_4x1", 1024, {1.531, 1.575, 1.539, 1.572}, 1.55425, 0.022500},
        {"SGEMM_NT_4x1_barrier", 64, {5.742, 5.746, 5.833, 5.728}, 5.76225, 0.047794},
        {"SGEMM_NT_4x1_barrier", 96, {7.680, 7.840, 7.867, 7.835}, 7.80550, 0.084839},
        {"SGEMM_NT_4x1_barrier", 128, {10.969, 11.587, 11.722, 11.280}, 11.38950, 0.335844},
        {"SGEMM_NT_4x1_barrier", 192, {8.580, 8.180, 8.413, 8.165}, 8.33450, 0.199193},
        {"SGEMM_NT_4x1_barrier", 256, {9.053, 9.263, 9.772, 9.530}, 9.40450, 0.313252},
        {"SGEMM_NT_4x1_barrier", 384, {10.075, 9.997, 9.991, 9.989}, 10.01300, 0.041473},
        {"SGEMM_NT_4x1_barrier", 512, {9.327, 9.263, 9.272, 9.109}, 9.24275, 0.093546},
        {"SGEMM_NT_4x1_barrier", 640, {9.895, 9.875, 9.822, 9.798}, 9.84750, 0.045141},
        {"SGEMM_NT_4x1_barrier", 768, {9.817, 9.869, 9.882, 9.809}, 9.84425, 0.036619},
        {"SGEMM_NT_4x1_barrier", 896, {9.840, 9.781, 9.806, 9.800}, 9.80675, 0.024595},
        {"SGEMM_NT_4x1_barrier", 1024, {9.829, 9.855, 9.765, 9.780}, 9.80725, 0.041955},
    };
    return rows;
}

struct LwsRow {
    int s_j;
    int s_i;
    std::size_t order;
    double rep[4];
    double mean;
    double std;
};

// SGEMM_NT_4x1_barrier across work-group shapes with 16-64 work-items.
inline const std::vector<LwsRow>& lws_sweep() {
    static const std::vector<LwsRow> rows = {
        {1, 16, 128, {11.833, 11.689, 11.880, 11.754}, 11.78900, 0.084542},
        {1, 16, 256, {10.670, 10.562, 10.198, 10.800}, 10.55750, 0.258665},
        {1, 16, 384, {10.853, 10.633, 10.732, 10.800}, 10.75450, 0.094940},
        {1, 16, 512, {10.035, 10.103, 10.311, 10.067}, 10.12900, 0.124472},
        {4, 4, 128, {8.486, 10.376, 11.008, 7.944}, 9.45350, 1.469935},
        {4, 4, 256, {7.748, 7.828, 8.131, 7.843}, 7.88750, 0.167604},
        {4, 4, 384, {7.451, 7.722, 7.369, 7.428}, 7.49250, 0.156849},
        {4, 4, 512, {6.648, 6.653, 6.597, 6.603}, 6.62525, 0.029330},
        {1, 32, 128, {11.225, 10.983, 10.969, 10.737}, 10.97850, 0.199328},
        {1, 32, 256, {10.741, 10.896, 10.764, 10.666}, 10.76675, 0.095789},
        {1, 32, 384, {10.886, 10.828, 10.848, 10.918}, 10.87000, 0.040033},
        {1, 32, 512, {10.604, 10.511, 10.657, 10.233}, 10.50125, 0.188740},
        {2, 16, 128, {10.183, 10.987, 11.149, 11.251}, 10.89250, 0.485330},
        {2, 16, 256, {10.236, 10.243, 10.098, 10.318}, 10.22375, 0.091682},
        {2, 16, 384, {10.773, 10.654, 10.705, 10.664}, 10.69900, 0.054043},
        {2, 16, 512, {10.111, 9.992, 10.170, 10.063}, 10.08400, 0.075344},
        {4, 8, 128, {10.424, 11.690, 11.045, 10.785}, 10.98600, 0.533961},
        {4, 8, 256, {9.224, 9.408, 9.894, 9.404}, 9.48250, 0.287441},
        {4, 8, 384, {10.033, 9.849, 9.897, 9.937}, 9.92900, 0.078111},
        {4, 8, 512, {9.290, 9.284, 9.234, 9.268}, 9.26900, 0.025113},
        {8, 4, 128, {8.766, 10.441, 8.472, 9.847}, 9.38150, 0.921097},
        {8, 4, 256, {8.177, 7.898, 8.701, 8.077}, 8.21325, 0.345041},
        {8, 4, 384, {7.450, 7.408, 8.062, 7.712}, 7.65800, 0.301051},
        {8, 4, 512, {6.638, 6.886, 6.680, 6.714}, 6.72950, 0.108865},
        {16, 2, 128, {6.986, 6.005, 7.991, 6.799}, 6.94525, 0.816642},
        {16, 2, 256, {4.361, 4.440, 4.181, 4.268}, 4.31250, 0.112370},
        {16, 2, 384, {3.986, 3.871, 4.051, 3.840}, 3.93700, 0.098593},
        {16, 2, 512, {3.145, 3.181, 3.101, 3.118}, 3.13625, 0.034903},
        {1, 64, 128, {9.883, 9.635, 9.516, 9.302}, 9.58400, 0.242315},
        {1, 64, 256, {10.119, 10.210, 10.266, 10.147}, 10.18550, 0.065790},
        {1, 64, 384, {10.360, 10.279, 10.303, 10.196}, 10.28450, 0.068081},
        {1, 64, 512, {10.047, 9.286, 9.982, 10.081}, 9.84900, 0.377574},
        {2, 32, 128, {10.674, 10.077, 10.607, 10.692}, 10.51250, 0.292628},
        {2, 32, 256, {10.264, 10.707, 10.419, 10.335}, 10.43125, 0.194443},
        {2, 32, 384, {10.766, 10.840, 10.800, 10.853}, 10.81475, 0.039559},
        {2, 32, 512, {10.426, 10.548, 10.636, 10.535}, 10.53625, 0.086110},
        {4, 16, 128, {10.968, 10.927, 11.710, 11.538}, 11.28575, 0.397192},
        {4, 16, 256, {9.831, 9.857, 10.084, 10.328}, 10.02500, 0.231769},
        {4, 16, 384, {10.748, 10.690, 10.754, 10.703}, 10.72375, 0.032004},
        {4, 16, 512, {10.057, 10.341, 9.944, 10.293}, 10.15875, 0.189481},
        {8, 8, 128, {10.113, 10.789, 10.852, 11.248}, 10.75050, 0.471062},
        {8, 8, 256, {9.211, 9.021, 8.993, 9.329}, 9.13850, 0.159711},
        {8, 8, 384, {9.953, 9.945, 9.857, 9.878}, 9.90825, 0.047940},
        {8, 8, 512, {9.253, 8.939, 9.097, 9.237}, 9.13150, 0.146218},
        {16, 4, 128, {10.681, 8.777, 7.442, 7.878}, 8.69450, 1.436247},
        {16, 4, 256, {7.134, 7.419, 7.597, 7.564}, 7.42850, 0.211008},
        {16, 4, 384, {7.863, 7.455, 7.525, 7.666}, 7.62725, 0.180004},
        {16, 4, 512, {6.591, 6.447, 6.691, 6.584}, 6.57825, 0.100224},
        {32, 2, 128, {8.237, 9.574, 7.350, 8.075}, 8.30900, 0.927334},
        {32, 2, 256, {4.351, 3.869, 4.520, 3.943}, 4.17075, 0.314849},
        {32, 2, 384, {4.163, 4.365, 4.321, 4.375}, 4.30600, 0.098177},
        {32, 2, 512, {3.075, 2.934, 2.944, 3.145}, 3.02450, 0.102861},
    };
    return rows;
}

} // namespace fixtures
