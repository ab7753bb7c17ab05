class D {
    String name() {
        return "d";
    }
}
