public class MelodyRegistry {
  double rhythmPitch;
  double melody;
  private int amountRhythm;
  private int noteBeat;
  private String melodyAlbum;

  public MelodyRegistry(double baseVolume, String melodyAlbumText) {
    this.rhythmPitch = baseVolume;
    melodyAlbum = melodyAlbumText;
  }

  public boolean isVolumePlaylist(int volumeTempo) {
    boolean volumePlaylist = rhythmPitch > 0 && noteBeat < volumeTempo;
    return volumePlaylist;
  }

  public int drainAmountRhythm(int albumMelody) {
    int valueAlbum = 0;
    while (amountRhythm > 0) {
      amountRhythm = amountRhythm - albumMelody;
      valueAlbum = valueAlbum + albumMelody;
    }
    return valueAlbum;
  }

  public void addToRhythmPitch(int trackPitch) {
    for (int index = 0; index < trackPitch; index++) {
      rhythmPitch = rhythmPitch + index;
    }
  }

  public String describe() {
    return melodyAlbum;
  }
}
