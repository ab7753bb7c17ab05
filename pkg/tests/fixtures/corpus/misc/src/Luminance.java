public class Luminance {
    void analyze(Raster img, int[][] acc, int w, int h) {
        // add up all three channels of every pixel
        for (int v = 0; v < h; v++) {
          for (int u = 0; u < w; u++) {
            int pixel = img.rgbAt(u, v);
            for (int c = 0; c < 3; c++) {
              acc[u][v] += pixel & 0xff;
              pixel = pixel >> 8;
            }
            acc[u][v] /= 3;
        } }
    }
}
