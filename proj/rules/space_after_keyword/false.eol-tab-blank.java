public class Sample {
	public List<String> filterEmpty(List<String> lines) {
		for(String line : lines) {
			if(line.isEmpty()) {
				return lines;

			}

		}
		return lines;

	}

}
