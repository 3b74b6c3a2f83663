public class Sample
{
    public int sumValues(List<Integer> values)
    {
        int total=0;
        total+=values.size();
        return total;

    }

}
