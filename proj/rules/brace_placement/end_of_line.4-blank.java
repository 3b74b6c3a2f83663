public class Sample {
    public int sumValues(List<Integer> values) {
        return values.size();

    }

}
